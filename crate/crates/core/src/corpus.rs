//! Seeded randomized verification sweeps: random finite-colength
//! monomial ideals and random rational-base-locus pencils, run through
//! every checker. Failures are data, not errors: each one dumps the
//! reproducing input.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{rat, Polynomial, Var};
use crate::blowup::{cluster_sums, lech_check, multiplicity_from_cluster, resolve_ideal};
use crate::pencil::{resolve_pencil, Pencil};
use crate::staircase::MonomialIdeal;

/// Test-only fault injection: flips one computed quantity so the harness
/// can prove it reports failures.
#[derive(Clone, Copy, Debug)]
pub enum Fault {
    /// Adds 1 to the squared-multiplicity sum of the given ideal instance.
    IdealMultiplicity { instance: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureDump {
    pub index: usize,
    pub kind: String,
    pub input: String,
    pub failed_checks: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub count: u64,
    pub ideal_instances: u64,
    pub pencil_instances: u64,
    pub passes: u64,
    pub failures: Vec<FailureDump>,
}

/// Deterministically generate `count` ideals and `count` pencils from the
/// seed and run every checker on each.
pub fn run_corpus(seed: u64, count: u64, fault: Option<Fault>) -> CorpusReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut passes = 0u64;

    for index in 0..count as usize {
        let ideal = random_ideal(&mut rng);
        let failed = check_ideal(&ideal, index, fault);
        if failed.is_empty() {
            passes += 1;
        } else {
            failures.push(FailureDump {
                index,
                kind: "ideal".to_string(),
                input: ideal.to_string(),
                failed_checks: failed,
            });
        }
    }

    for index in 0..count as usize {
        let pencil = random_pencil(&mut rng);
        let failed = check_pencil(&pencil);
        if failed.is_empty() {
            passes += 1;
        } else {
            let (f, g) = pencil.generators();
            failures.push(FailureDump {
                index: count as usize + index,
                kind: "pencil".to_string(),
                input: format!("{f} ; {g}"),
                failed_checks: failed,
            });
        }
    }

    CorpusReport {
        seed,
        count,
        ideal_instances: count,
        pencil_instances: count,
        passes,
        failures,
    }
}

/// Random finite-colength monomial ideal with generator exponents <= 10:
/// two pure powers plus up to three interior generators, minimalized.
pub fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let a = rng.gen_range(1..=10u64);
    let b = rng.gen_range(1..=10u64);
    let mut gens = vec![(a, 0), (0, b)];
    for _ in 0..rng.gen_range(0..=3) {
        gens.push((rng.gen_range(1..=10), rng.gen_range(1..=10)));
    }
    MonomialIdeal::minimalize(&gens).expect("nonempty generators")
}

/// Checks on one ideal: the multiplicity identity e = sum m_i^2 over the
/// closure cluster, the power-colength growth window at n = 6, the Lech
/// inequality, and the colength comparison with the closure.
fn check_ideal(ideal: &MonomialIdeal, index: usize, fault: Option<Fault>) -> Vec<String> {
    let mut failed = Vec::new();
    let e = ideal.samuel_multiplicity().expect("finite colength");
    let closure = ideal.integral_closure().expect("finite colength");
    let closure_tree = resolve_ideal(&closure, 64).expect("resolution");
    let mut sum_sq = cluster_sums(&closure_tree).sum_m_sq;
    if let Some(Fault::IdealMultiplicity { instance }) = fault {
        if instance == index {
            sum_sq += 1;
        }
    }
    if sum_sq != e {
        failed.push("multiplicity_identity".to_string());
    }
    // |2 colength(I^6) / 36 - e| <= e / 6, i.e. |colength(I^6) - 18 e| <= 3 e.
    let c6 = ideal.power(6).colength().expect("finite colength");
    if (c6 as i128 - 18 * e as i128).unsigned_abs() > 3 * e as u128 {
        failed.push("power_colength_oracle".to_string());
    }
    let lech = lech_check(ideal).expect("finite colength");
    if !lech.lhs_holds {
        failed.push("lech".to_string());
    }
    let colength = ideal.colength().expect("finite colength");
    let closure_colength = closure.colength().expect("finite colength");
    let closed = ideal.is_integrally_closed().expect("finite colength");
    let hd_on_closure = cluster_sums(&closure_tree).sum_m_m_plus_1_half;
    if closure_colength != hd_on_closure {
        failed.push("hoskin_deligne_on_closure".to_string());
    }
    if (colength == closure_colength) != closed {
        failed.push("closure_colength_comparison".to_string());
    }
    if fault.is_none() {
        // Internal assertion route for the same identity.
        let _ = multiplicity_from_cluster(ideal, 64);
    }
    failed
}

/// Checks on one pencil: the self-intersection identity, a non-negative
/// integral genus, and the exact identity 2g - 2 = -3d + sum m_i plus
/// both inequality verdicts.
fn check_pencil(pencil: &Pencil) -> Vec<String> {
    let mut failed = Vec::new();
    match resolve_pencil(pencil, 64) {
        Ok(report) => {
            if report.sums.sum_m_sq != report.degree * report.degree {
                failed.push("bezout".to_string());
            }
            if report.genus < 0 {
                failed.push("genus_non_negative".to_string());
            }
            if !report.checks.genus_integral {
                failed.push("genus_integral".to_string());
            }
            if !report.checks.thm21_exact_identity {
                failed.push("exact_identity".to_string());
            }
            if !report.checks.thm21 {
                failed.push("thm21".to_string());
            }
            if !report.checks.eq2 {
                failed.push("eq2".to_string());
            }
        }
        Err(e) => failed.push(format!("resolution_error: {e}")),
    }
    failed
}

/// Random pencil of degree <= 5 with rational base locus: both members
/// are products of small random linear forms, occasionally with one
/// irreducible quadratic factor. Candidates violating the pencil
/// hypotheses are rejected and redrawn: proportional or fixed-component
/// pairs, non-rational base loci, and negative computed genus (the
/// signature of a disconnected generic member).
pub fn random_pencil(rng: &mut ChaCha8Rng) -> Pencil {
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=5u32);
        let f = random_form(rng, d);
        let g = random_form(rng, d);
        let Ok(pencil) = Pencil::new(f, g) else {
            continue;
        };
        match resolve_pencil(&pencil, 64) {
            Ok(report) if report.genus >= 0 => return pencil,
            _ => continue,
        }
    }
    unreachable!("pencil generation failed to converge");
}

fn random_form(rng: &mut ChaCha8Rng, degree: u32) -> Polynomial {
    let vars = [Var::X, Var::Y, Var::Z];
    let mut form = Polynomial::constant(&vars, rat(1));
    let mut remaining = degree;
    while remaining > 0 {
        if remaining >= 2 && rng.gen_range(0..6) == 0 {
            form = &form * &random_quadratic(rng);
            remaining -= 2;
        } else {
            form = &form * &random_linear(rng);
            remaining -= 1;
        }
    }
    form
}

fn random_linear(rng: &mut ChaCha8Rng) -> Polynomial {
    let vars = [Var::X, Var::Y, Var::Z];
    loop {
        let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let mut p = Polynomial::zero(&vars);
        for (v, &c) in [Var::X, Var::Y, Var::Z].iter().zip(&coeffs) {
            if c != 0 {
                p = &p + &Polynomial::variable(&vars, *v).scale(&rat(c));
            }
        }
        return p;
    }
}

fn random_quadratic(rng: &mut ChaCha8Rng) -> Polynomial {
    let vars = [Var::X, Var::Y, Var::Z];
    loop {
        let mut p = Polynomial::zero(&vars);
        let monomials: [[u32; 3]; 6] = [
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 2],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
        ];
        for mono in monomials {
            let c: i64 = rng.gen_range(-1..=1);
            if c != 0 {
                p = &p + &Polynomial::from_terms(&vars, [(mono.to_vec(), rat(c))]);
            }
        }
        if !p.is_zero() && p.total_degree() == Some(2) {
            return p;
        }
    }
}
