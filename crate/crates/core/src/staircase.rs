//! Finite-colength monomial ideals in two variables: minimal staircase
//! generators, colength, order, powers, the Newton polygon, integral
//! closure, and Samuel multiplicity.

use std::fmt;

use crate::error::{Error, Result};

/// Monomial ideal in x and y given by its minimal generators as exponent
/// pairs (a, b), meaning x^a y^b. Invariants: the list is a nonempty
/// antichain under componentwise <=, sorted by a ascending (hence b
/// strictly descending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<(u64, u64)>,
}

/// Vertices of the compact boundary of conv(gens + first quadrant),
/// ordered by a ascending. Slopes strictly increase along the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(u64, u64)>,
}

impl MonomialIdeal {
    /// Discard every generator that is componentwise >= another one and
    /// sort what is left. The result generates the same ideal.
    pub fn minimalize(gens: &[(u64, u64)]) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut sorted = gens.to_vec();
        sorted.sort();
        sorted.dedup();
        // Sorted lexicographically, so within one a only the smallest b
        // can survive, and a later pair is redundant iff its b is not
        // strictly below everything seen at smaller a.
        let mut minimal: Vec<(u64, u64)> = Vec::new();
        let mut min_b = u64::MAX;
        let mut last_a = u64::MAX;
        for (a, b) in sorted {
            if a == last_a || b >= min_b {
                continue;
            }
            minimal.push((a, b));
            min_b = b;
            last_a = a;
        }
        Ok(MonomialIdeal { gens: minimal })
    }

    pub fn generators(&self) -> &[(u64, u64)] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [(0, 0)]
    }

    /// Exponents (A, B) of the pure powers x^A and y^B, present exactly
    /// when the ideal has finite colength.
    fn pure_powers(&self) -> Result<(u64, u64)> {
        let first = self.gens.first().copied().unwrap();
        let last = self.gens.last().copied().unwrap();
        if first.0 != 0 || last.1 != 0 {
            return Err(Error::InfiniteColength);
        }
        Ok((last.0, first.1))
    }

    pub fn has_finite_colength(&self) -> bool {
        self.pure_powers().is_ok()
    }

    /// Number of standard monomials: lattice points not componentwise >=
    /// any generator. Zero exactly for the unit ideal.
    pub fn colength(&self) -> Result<u64> {
        let (a_max, _) = self.pure_powers()?;
        let mut total = 0u64;
        let mut height = u64::MAX;
        let mut next = 0usize;
        for a in 0..a_max {
            while next < self.gens.len() && self.gens[next].0 <= a {
                height = self.gens[next].1;
                next += 1;
            }
            total += height;
        }
        Ok(total)
    }

    /// Minimum total degree among the generators; the multiplicity at the
    /// origin of a generic element.
    pub fn order(&self) -> u64 {
        self.gens.iter().map(|&(a, b)| a + b).min().unwrap()
    }

    /// The n-th power: minimalized n-fold sums of generators.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        assert!(n >= 1);
        let mut sums: Vec<(u64, u64)> = vec![(0, 0)];
        for _ in 0..n {
            let mut next: Vec<(u64, u64)> = sums
                .iter()
                .flat_map(|&(a, b)| self.gens.iter().map(move |&(c, d)| (a + c, b + d)))
                .collect();
            next.sort();
            next.dedup();
            sums = next;
        }
        MonomialIdeal::minimalize(&sums).expect("powers of a nonempty ideal are nonempty")
    }

    pub fn newton_polygon(&self) -> Result<NewtonPolygon> {
        self.pure_powers()?;
        // Lower-left convex hull of the generators, which are already
        // sorted by a ascending with b strictly descending. Pop the last
        // hull point while it fails to lie strictly below the segment
        // from its predecessor to the incoming point.
        let mut hull: Vec<(u64, u64)> = Vec::new();
        for &p in &self.gens {
            while hull.len() >= 2 {
                let q = hull[hull.len() - 1];
                let r = hull[hull.len() - 2];
                let cross = (q.0 as i128 - r.0 as i128) * (p.1 as i128 - r.1 as i128)
                    - (q.1 as i128 - r.1 as i128) * (p.0 as i128 - r.0 as i128);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        Ok(NewtonPolygon { vertices: hull })
    }

    /// Minimal generators of the lattice points inside the Newton-polygon
    /// region: the integral closure. Contains the ideal and is the
    /// smallest integrally closed ideal doing so.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        let polygon = self.newton_polygon()?;
        let (a_max, _) = self.pure_powers()?;
        let gens: Vec<(u64, u64)> = (0..=a_max).map(|a| (a, polygon.min_height_at(a))).collect();
        MonomialIdeal::minimalize(&gens)
    }

    /// Whether the exponent pair lies in the integral closure: an exact
    /// point-in-polygon test against the Newton region.
    pub fn membership_in_closure(&self, e: (u64, u64)) -> Result<bool> {
        Ok(self.newton_polygon()?.region_contains(e))
    }

    /// Samuel multiplicity: twice the area of the first-quadrant region
    /// cut out below the Newton polygon. With lattice vertices the
    /// shoelace sum is an exact integer.
    pub fn samuel_multiplicity(&self) -> Result<u64> {
        Ok(self.newton_polygon()?.doubled_area_below())
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// Generator strings like "x^3", "x^2*y", "y".
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|&g| monomial_string(g)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator_strings().join(", "))
    }
}

fn monomial_string((a, b): (u64, u64)) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{b}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[(u64, u64)] {
        &self.vertices
    }

    /// Smallest integer b with (a, b) inside the region, for a up to the
    /// last vertex; 0 beyond it.
    fn min_height_at(&self, a: u64) -> u64 {
        let verts = &self.vertices;
        if a >= verts.last().unwrap().0 {
            return 0;
        }
        // Find the edge with a1 <= a < a2 and take the ceiling of the
        // supporting line's height there.
        for win in verts.windows(2) {
            let (a1, b1) = win[0];
            let (a2, b2) = win[1];
            if a1 <= a && a < a2 {
                // height = b1 + (b2 - b1) (a - a1) / (a2 - a1), with
                // b2 < b1; ceil of a non-negative rational.
                let da = (a2 - a1) as i128;
                let num = b1 as i128 * da - (b1 as i128 - b2 as i128) * (a - a1) as i128;
                let ceil = (num + da - 1).div_euclid(da);
                return ceil as u64;
            }
        }
        // Single-vertex polygon (unit ideal): the vertex is (0, 0).
        verts.first().unwrap().1
    }

    /// Exact test for whether an exponent pair lies in the region
    /// conv(generators + first quadrant): on the upper-right side of every
    /// supporting edge line.
    pub fn region_contains(&self, (a, b): (u64, u64)) -> bool {
        let verts = &self.vertices;
        if verts.len() == 1 {
            let (va, vb) = verts[0];
            return a >= va && b >= vb;
        }
        if a >= verts.last().unwrap().0 {
            return true;
        }
        if b >= verts.first().unwrap().1 {
            return true;
        }
        for win in verts.windows(2) {
            let (a1, b1) = win[0];
            let (a2, b2) = win[1];
            // (b - b1)(a2 - a1) >= (b2 - b1)(a - a1)
            let lhs = (b as i128 - b1 as i128) * (a2 as i128 - a1 as i128);
            let rhs = (b2 as i128 - b1 as i128) * (a as i128 - a1 as i128);
            if lhs < rhs {
                return false;
            }
        }
        true
    }

    /// Shoelace over the closed path (0,0) -> (0, B) -> vertices -> (A, 0)
    /// -> (0,0); twice the enclosed area, an exact integer.
    pub fn doubled_area_below(&self) -> u64 {
        let mut path: Vec<(i128, i128)> = vec![(0, 0)];
        path.extend(self.vertices.iter().map(|&(a, b)| (a as i128, b as i128)));
        let mut sum: i128 = 0;
        for i in 0..path.len() {
            let (x1, y1) = path[i];
            let (x2, y2) = path[(i + 1) % path.len()];
            sum += x1 * y2 - x2 * y1;
        }
        sum.unsigned_abs() as u64
    }
}

/// Every finite-colength monomial ideal with colength between 1 and
/// `max_colength`, enumerated through staircase column heights, i.e.
/// partitions of the colength.
pub fn enumerate_staircases(max_colength: u64) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for c in 1..=max_colength {
        let mut partition = Vec::new();
        collect_partitions(c, c, &mut partition, &mut out);
    }
    out
}

fn collect_partitions(
    remaining: u64,
    max_part: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<MonomialIdeal>,
) {
    if remaining == 0 {
        out.push(ideal_from_column_heights(current));
        return;
    }
    let cap = remaining.min(max_part);
    for part in (1..=cap).rev() {
        current.push(part);
        collect_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Ideal whose standard monomials form the staircase with the given
/// non-increasing column heights.
pub fn ideal_from_column_heights(heights: &[u64]) -> MonomialIdeal {
    let mut gens = Vec::new();
    for (a, &h) in heights.iter().enumerate() {
        if a == 0 || h < heights[a - 1] {
            gens.push((a as u64, h));
        }
    }
    gens.push((heights.len() as u64, 0));
    MonomialIdeal::minimalize(&gens).expect("staircase yields generators")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::minimalize(&crate::parse::parse_monomial_ideal(text).unwrap()).unwrap()
    }

    /// Independent colength oracle: brute-force lattice count.
    fn colength_brute(i: &MonomialIdeal) -> u64 {
        let a_max = i.generators().iter().map(|g| g.0).max().unwrap();
        let b_max = i.generators().iter().map(|g| g.1).max().unwrap();
        let mut count = 0;
        for a in 0..=a_max {
            for b in 0..=b_max {
                let dominated = i.generators().iter().any(|&(ga, gb)| a >= ga && b >= gb);
                if !dominated {
                    count += 1;
                }
            }
        }
        count
    }

    /// Brute-force closure membership: some n <= 12 with n.e a sum of n
    /// generators plus a non-negative vector.
    fn membership_brute(i: &MonomialIdeal, e: (u64, u64), max_n: u32) -> bool {
        fn search(gens: &[(u64, u64)], target: (u64, u64), slots: u32, from: usize) -> bool {
            if slots == 0 {
                return true;
            }
            for idx in from..gens.len() {
                let (ga, gb) = gens[idx];
                if ga > target.0 || gb > target.1 {
                    continue;
                }
                if search(gens, (target.0 - ga, target.1 - gb), slots - 1, idx) {
                    return true;
                }
            }
            false
        }
        (1..=max_n).any(|n| search(i.generators(), (e.0 * n as u64, e.1 * n as u64), n, 0))
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            MonomialIdeal::minimalize(&[(3, 0), (0, 2), (4, 1)])
                .unwrap()
                .generators(),
            &[(0, 2), (3, 0)]
        );
        assert_eq!(
            MonomialIdeal::minimalize(&[(1, 0), (0, 1)])
                .unwrap()
                .generators(),
            &[(0, 1), (1, 0)]
        );
        assert_eq!(
            MonomialIdeal::minimalize(&[(2, 2), (2, 0), (0, 2)])
                .unwrap()
                .generators(),
            &[(0, 2), (2, 0)]
        );
        assert_eq!(MonomialIdeal::minimalize(&[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn colength_examples() {
        assert_eq!(ideal("x, y").colength().unwrap(), 1);
        assert_eq!(ideal("x^3, y^2").colength().unwrap(), 6);
        assert_eq!(ideal("x^2, x*y, y^2").colength().unwrap(), 3);
        assert_eq!(
            ideal("x^3, y^2").colength().unwrap(),
            colength_brute(&ideal("x^3, y^2"))
        );
    }

    #[test]
    fn infinite_colength_detected() {
        assert_eq!(ideal("x^2, x*y").colength(), Err(Error::InfiniteColength));
        assert_eq!(ideal("y^3").colength(), Err(Error::InfiniteColength));
        assert!(ideal("x, y").has_finite_colength());
    }

    #[test]
    fn order_examples() {
        assert_eq!(ideal("x, y").order(), 1);
        assert_eq!(ideal("x^3, y^2").order(), 2);
        assert_eq!(ideal("x^2, x*y, y^3").order(), 2);
    }

    #[test]
    fn power_examples() {
        assert_eq!(
            ideal("x, y").power(2).generators(),
            &[(0, 2), (1, 1), (2, 0)]
        );
        assert_eq!(
            ideal("x^3, y^2").power(2).generators(),
            &[(0, 4), (3, 2), (6, 0)]
        );
        let i = ideal("x^3, x*y, y^2");
        assert_eq!(i.power(1), i);
    }

    #[test]
    fn power_composition() {
        for text in ["x, y", "x^3, y^2", "x^4, x*y, y^3"] {
            let i = ideal(text);
            assert_eq!(i.power(2).power(3), i.power(6), "ideal {text}");
        }
    }

    #[test]
    fn newton_polygon_examples() {
        assert_eq!(
            ideal("x^3, y^2").newton_polygon().unwrap().vertices(),
            &[(0, 2), (3, 0)]
        );
        // (2,1) lies strictly inside: 2/3 + 1/2 > 1.
        assert_eq!(
            ideal("x^3, x^2*y, y^2")
                .newton_polygon()
                .unwrap()
                .vertices(),
            &[(0, 2), (3, 0)]
        );
        assert_eq!(
            ideal("x^4, x*y, y^3").newton_polygon().unwrap().vertices(),
            &[(0, 3), (1, 1), (4, 0)]
        );
    }

    #[test]
    fn integral_closure_examples() {
        assert_eq!(ideal("x, y").integral_closure().unwrap(), ideal("x, y"));
        assert_eq!(
            ideal("x^3, y^2").integral_closure().unwrap(),
            ideal("x^3, x^2*y, y^2")
        );
        assert_eq!(
            ideal("x^3, y^3").integral_closure().unwrap(),
            ideal("x^3, x^2*y, x*y^2, y^3")
        );
    }

    #[test]
    fn membership_examples() {
        let i = ideal("x^3, y^2");
        assert!(i.membership_in_closure((2, 1)).unwrap());
        assert!(!i.membership_in_closure((1, 1)).unwrap());
        assert!(!ideal("x, y").membership_in_closure((0, 0)).unwrap());
    }

    #[test]
    fn membership_matches_brute_force() {
        let corpus = [
            "x, y",
            "x^3, y^2",
            "x^2, x*y, y^2",
            "x^4, x*y, y^3",
            "x^5, x^2*y^2, y^4",
            "x^8, x^3*y, y^6",
        ];
        for text in corpus {
            let i = ideal(text);
            for a in 0..=8 {
                for b in 0..=8 {
                    assert_eq!(
                        i.membership_in_closure((a, b)).unwrap(),
                        membership_brute(&i, (a, b), 12),
                        "ideal {text}, point ({a}, {b})"
                    );
                }
            }
        }
    }

    #[test]
    fn samuel_examples() {
        assert_eq!(ideal("x, y").samuel_multiplicity().unwrap(), 1);
        assert_eq!(ideal("x^2, y^3").samuel_multiplicity().unwrap(), 6);
        assert_eq!(ideal("x^7, y^4").samuel_multiplicity().unwrap(), 28);
        assert_eq!(ideal("x^3, x^2*y, y^2").samuel_multiplicity().unwrap(), 6);
    }

    #[test]
    fn samuel_matches_power_colength_growth() {
        // colength(I^n) = e n^2 / 2 + O(n); the quadratic fit at n = 6
        // pins e for these ideals.
        for text in ["x^2, y^3", "x^3, x^2*y, y^2", "x, y^5"] {
            let i = ideal(text);
            let e = i.samuel_multiplicity().unwrap();
            let c6 = i.power(6).colength().unwrap();
            // |2 c / n^2 - e| <= e / n  <=>  |c - 18 e| <= 3 e
            let diff = (c6 as i128 - 18 * e as i128).unsigned_abs();
            assert!(diff <= 3 * e as u128, "ideal {text}: c6={c6}, e={e}");
        }
    }

    #[test]
    fn closed_examples() {
        assert!(ideal("x^2, x*y, y^2").is_integrally_closed().unwrap());
        assert!(!ideal("x^3, y^2").is_integrally_closed().unwrap());
        assert!(ideal("x, y^5").is_integrally_closed().unwrap());
    }

    #[test]
    fn closure_colength_and_multiplicity_relations() {
        for text in ["x, y", "x^3, y^2", "x^5, x*y^2, y^3", "x^4, y^4"] {
            let i = ideal(text);
            let closure = i.integral_closure().unwrap();
            assert!(closure.is_integrally_closed().unwrap());
            let ci = i.colength().unwrap();
            let cc = closure.colength().unwrap();
            assert!(ci >= cc, "ideal {text}");
            assert_eq!(ci == cc, i.is_integrally_closed().unwrap(), "ideal {text}");
            assert_eq!(
                i.samuel_multiplicity().unwrap(),
                closure.samuel_multiplicity().unwrap(),
                "ideal {text}"
            );
            assert_eq!(i.order(), closure.order(), "ideal {text}");
        }
    }

    #[test]
    fn staircase_enumeration_counts_partitions() {
        // Partition numbers p(1)..p(6) = 1, 2, 3, 5, 7, 11.
        let all = enumerate_staircases(6);
        assert_eq!(all.len(), 1 + 2 + 3 + 5 + 7 + 11);
        for i in &all {
            assert!(i.colength().unwrap() <= 6);
            assert!(i.colength().unwrap() >= 1);
        }
    }

    #[test]
    fn staircase_from_heights() {
        // Heights (2, 2, 2): standard monomials {0,1,2} x {0,1}.
        let i = ideal_from_column_heights(&[2, 2, 2]);
        assert_eq!(i, ideal("x^3, y^2"));
        assert_eq!(i.colength().unwrap(), 6);
    }
}
