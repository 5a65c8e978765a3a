//! Point blow-ups of monomial ideals in coordinate charts, cluster trees
//! of base multiplicities, and the Deligne-Hoskin and Lech verification
//! engines.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::staircase::MonomialIdeal;

/// Which chart origin of the parent blow-up a point sits at, or the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    Root,
    X,
    Y,
}

/// One actual or infinitely near base point carrying its multiplicity.
/// `point` is empty for the torus-fixed monomial case; pencil resolutions
/// fill it with exact coordinates (projective for roots, chart-local for
/// children).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterNode {
    pub m: u64,
    pub chart: Chart,
    #[serde(
        skip_serializing_if = "Vec::is_empty",
        serialize_with = "rationals_as_strings"
    )]
    pub point: Vec<Rational>,
    pub children: Vec<ClusterNode>,
}

fn rationals_as_strings<S: Serializer>(
    v: &Vec<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

/// Forest of cluster nodes; empty for base-point-free input. Serializes
/// as the list of root nodes, children ordered x-chart before y-chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ClusterTree {
    pub roots: Vec<ClusterNode>,
}

impl ClusterNode {
    fn leaf(m: u64, chart: Chart, point: Vec<Rational>) -> ClusterNode {
        ClusterNode {
            m,
            chart,
            point,
            children: Vec::new(),
        }
    }
}

// Deep chains are legitimate clusters ((x, y^k) alone is a k-chain), so
// dropping must not recurse through the tree.
impl Drop for ClusterNode {
    fn drop(&mut self) {
        let mut stack = std::mem::take(&mut self.children);
        while let Some(mut node) = stack.pop() {
            stack.extend(std::mem::take(&mut node.children));
        }
    }
}

impl ClusterTree {
    pub fn empty() -> ClusterTree {
        ClusterTree { roots: Vec::new() }
    }

    /// Multiplicities in depth-first preorder, children in stored order.
    pub fn multiplicities(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack: Vec<&ClusterNode> = self.roots.iter().rev().collect();
        while let Some(node) = stack.pop() {
            out.push(node.m);
            stack.extend(node.children.iter().rev());
        }
        out
    }
}

/// The four multiplicity sums every identity in this crate consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterSums {
    pub sum_m: u64,
    pub sum_m_sq: u64,
    pub sum_m_m_minus_1: u64,
    pub sum_m_m_plus_1_half: u64,
}

pub fn cluster_sums(tree: &ClusterTree) -> ClusterSums {
    let ms = tree.multiplicities();
    let sums = ClusterSums {
        sum_m: ms.iter().sum(),
        sum_m_sq: ms.iter().map(|m| m * m).sum(),
        sum_m_m_minus_1: ms.iter().map(|m| m * (m - 1)).sum(),
        sum_m_m_plus_1_half: ms.iter().map(|m| m * (m + 1) / 2).sum(),
    };
    // sum m >= sqrt(sum m^2) for non-negative entries.
    debug_assert!((sums.sum_m as u128).pow(2) >= sums.sum_m_sq as u128);
    sums
}

/// One quadratic transform of a finite-colength monomial ideal at the
/// origin: returns the order m and the proper transforms in the two
/// standard charts, x-chart exponents (a, b) -> (a + b - m, b) and
/// y-chart (a, b) -> (a, a + b - m), both minimalized.
pub fn transform_monomial(ideal: &MonomialIdeal) -> Result<(u64, MonomialIdeal, MonomialIdeal)> {
    if !ideal.has_finite_colength() {
        return Err(Error::InfiniteColength);
    }
    let m = ideal.order();
    if m == 0 {
        return Err(Error::UnitIdeal);
    }
    let x_chart: Vec<(u64, u64)> = ideal
        .generators()
        .iter()
        .map(|&(a, b)| (a + b - m, b))
        .collect();
    let y_chart: Vec<(u64, u64)> = ideal
        .generators()
        .iter()
        .map(|&(a, b)| (a, a + b - m))
        .collect();
    let x_chart = MonomialIdeal::minimalize(&x_chart)?;
    let y_chart = MonomialIdeal::minimalize(&y_chart)?;
    // Co-support on the exceptional line is pinned to the chart origins:
    // an order-achieving generator lands on the axis in each chart.
    debug_assert!(x_chart.generators().iter().any(|g| g.0 == 0));
    debug_assert!(y_chart.generators().iter().any(|g| g.1 == 0));
    Ok((m, x_chart, y_chart))
}

/// Resolve a finite-colength monomial ideal into its multiplicity
/// cluster: root multiplicity = order, children from recursing on each
/// non-unit chart transform, x-chart child first. The unit ideal yields
/// the empty tree.
///
/// Runs on an explicit worklist, so chains of any depth the cap allows
/// are fine: (x, y^k) alone nests k levels deep.
pub fn resolve_ideal(ideal: &MonomialIdeal, depth_cap: u32) -> Result<ClusterTree> {
    if !ideal.has_finite_colength() {
        return Err(Error::InfiniteColength);
    }
    if ideal.is_unit() {
        return Ok(ClusterTree::empty());
    }

    struct Frame {
        ideal: MonomialIdeal,
        chart: Chart,
        depth: u32,
        parent: Option<usize>,
    }

    let mut nodes: Vec<ClusterNode> = Vec::new();
    let mut kids: Vec<Vec<usize>> = Vec::new();
    // LIFO stack: push the y-chart first so the x-chart child is
    // created (and attached) first.
    let mut stack = vec![Frame {
        ideal: ideal.clone(),
        chart: Chart::Root,
        depth: 1,
        parent: None,
    }];
    while let Some(frame) = stack.pop() {
        if frame.depth > depth_cap {
            return Err(Error::DepthExceeded { cap: depth_cap });
        }
        let (m, x_chart, y_chart) = transform_monomial(&frame.ideal)?;
        let index = nodes.len();
        nodes.push(ClusterNode::leaf(m, frame.chart, Vec::new()));
        kids.push(Vec::new());
        if let Some(p) = frame.parent {
            kids[p].push(index);
        }
        if !y_chart.is_unit() {
            stack.push(Frame {
                ideal: y_chart,
                chart: Chart::Y,
                depth: frame.depth + 1,
                parent: Some(index),
            });
        }
        if !x_chart.is_unit() {
            stack.push(Frame {
                ideal: x_chart,
                chart: Chart::X,
                depth: frame.depth + 1,
                parent: Some(index),
            });
        }
    }

    // Children always carry larger indices than their parent, so a
    // reverse pass assembles every subtree before its parent collects it.
    let mut slots: Vec<Option<ClusterNode>> = nodes.into_iter().map(Some).collect();
    let mut roots = Vec::new();
    for i in (0..slots.len()).rev() {
        let children: Vec<ClusterNode> = kids[i]
            .iter()
            .map(|&c| slots[c].take().expect("child assembled once"))
            .collect();
        let node = slots[i].as_mut().expect("node present");
        node.children = children;
        if i == 0 {
            roots.push(slots[0].take().expect("root present"));
        }
    }
    Ok(ClusterTree { roots })
}

/// Deligne-Hoskin report: for an integrally closed ideal the colength
/// equals sum m_i (m_i + 1) / 2 over its cluster; otherwise the colength
/// strictly exceeds that sum taken on the closure.
#[derive(Clone, Debug, Serialize)]
pub struct HoskinDeligneReport {
    pub colength: u64,
    pub hd_sum: u64,
    pub closed: bool,
    pub verdict: String,
    pub clusters_equal: bool,
    pub cluster: ClusterTree,
    pub closure_cluster: ClusterTree,
}

pub fn hoskin_deligne_check(ideal: &MonomialIdeal, depth_cap: u32) -> Result<HoskinDeligneReport> {
    let colength = ideal.colength()?;
    let closed = ideal.is_integrally_closed()?;
    let closure = ideal.integral_closure()?;
    let cluster = resolve_ideal(ideal, depth_cap)?;
    let closure_cluster = resolve_ideal(&closure, depth_cap)?;
    let hd_sum = cluster_sums(&closure_cluster).sum_m_m_plus_1_half;
    let verdict = if closed {
        assert_eq!(colength, hd_sum, "colength identity for closed ideals");
        "equality"
    } else {
        assert!(colength > hd_sum, "strict drop for non-closed ideals");
        "strict"
    };
    Ok(HoskinDeligneReport {
        colength,
        hd_sum,
        closed,
        verdict: verdict.to_string(),
        clusters_equal: cluster == closure_cluster,
        cluster,
        closure_cluster,
    })
}

/// Lech report: e + sqrt(e) <= 2 colength, decided exactly as
/// 2 colength - e >= 0 and (2 colength - e)^2 >= e. The slack is a
/// display-only decimal string with 4 places.
#[derive(Clone, Debug, Serialize)]
pub struct LechReport {
    pub e: u64,
    pub colength: u64,
    pub lhs_holds: bool,
    pub slack: String,
}

pub fn lech_check(ideal: &MonomialIdeal) -> Result<LechReport> {
    let e = ideal.samuel_multiplicity()?;
    let colength = ideal.colength()?;
    let margin = 2 * colength as i128 - e as i128;
    let lhs_holds = margin >= 0 && margin * margin >= e as i128;
    Ok(LechReport {
        e,
        colength,
        lhs_holds,
        slack: slack_string(margin, e),
    })
}

/// (2 colength - e) - sqrt(e), rendered to 4 decimal places via exact
/// integer square roots; no floating point involved.
fn slack_string(margin: i128, e: u64) -> String {
    // round(10^4 sqrt(e)) = floor((isqrt(4 e 10^8) + 1) / 2)
    let root_scaled = isqrt_u128(4 * e as u128 * 100_000_000).div_ceil(2);
    let scaled = margin * 10_000 - root_scaled as i128;
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.unsigned_abs();
    format!("{}{}.{:04}", sign, abs / 10_000, abs % 10_000)
}

pub(crate) fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    // Floating seed, clamped to the largest possible root, then fixed up
    // to the exact floor with overflow-checked squaring.
    let mut x = ((n as f64).sqrt() as u128).min((1u128 << 64) - 1);
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Sum of m_i^2 over the cluster of the integral closure; equals the
/// Samuel multiplicity, which is asserted.
pub fn multiplicity_from_cluster(ideal: &MonomialIdeal, depth_cap: u32) -> Result<u64> {
    let closure = ideal.integral_closure()?;
    let tree = resolve_ideal(&closure, depth_cap)?;
    let sum_sq = cluster_sums(&tree).sum_m_sq;
    let e = ideal.samuel_multiplicity()?;
    assert_eq!(sum_sq, e, "sum of squared multiplicities must equal e");
    Ok(sum_sq)
}
