//! Acceptance runner: one PASS/FAIL line per criterion, exact comparisons,
//! each with a wall-clock budget. Exits nonzero if anything fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use springer_levels::field::{jordan_matrix, jordan_type, kx_span, quotient_action, Subspace};
use springer_levels::orbits::{
    classify_type, cyclic_dim_formula, max_module_dim_formula, max_module_dim_oracle,
    quotient_type_after_ui, semi_standard_element, standard_element, EnhancedPoint,
    SemiStandardCoeffs,
};
use springer_levels::partitions::{
    bracket_label, check_centralizer_identity, dim_centralizer_levi, dim_centralizer_symplectic,
    dim_stratum_enhanced, dim_stratum_fibre, Case, LevelComposition, MultiPartition, Partition,
};
use springer_levels::pointcount::{
    centralizer_order, check_degree, count_types_for_x, gl_order, orbit_size, DEFAULT_BUDGET,
};
use springer_levels::reflection::{regular_rep_check, springer_table, wnat_sum_of_squares};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cases_for(r: usize) -> Vec<Case> {
    if r >= 2 {
        vec![Case::Exotic, Case::Enhanced]
    } else {
        vec![Case::Enhanced]
    }
}

fn regular_representation() -> Outcome {
    let mut checked = 0;
    for n in 0..=8 {
        for r in 1..=4 {
            ensure(regular_rep_check(n, r), || format!("sum of squares != r^n n! at n={n}, r={r}"))?;
            checked += 1;
        }
    }
    let mut groups = 0;
    for n in 0..=6 {
        for r in 1..=4 {
            for case in cases_for(r) {
                for m in LevelComposition::enumerate(n, r, case == Case::Exotic) {
                    let ok = wnat_sum_of_squares(&m, case).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("sum of squares != |W♮| for m={:?} ({case:?})", m.entries()))?;
                    groups += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (n,r) pairs, {groups} subgroups"))
}

fn correspondence_bijection() -> Outcome {
    let mut total = 0;
    for n in 0..=6 {
        for r in 2..=4 {
            let mut seen = BTreeSet::new();
            for m in LevelComposition::enumerate(n, r, true) {
                for label in m.tilde_labels().map_err(|e| e.to_string())? {
                    ensure(seen.insert(label.clone()), || format!("{label} appears twice (n={n}, r={r})"))?;
                }
            }
            let all: BTreeSet<_> = MultiPartition::enumerate(n, r).into_iter().collect();
            ensure(seen == all, || format!("union of P̃(m) differs from P_(n,r) at n={n}, r={r}"))?;
            let expected = common::multipartition_count(n, r) as usize;
            ensure(all.len() == expected, || {
                format!("|P_({n},{r})| = {} but the generating function gives {expected}", all.len())
            })?;
            total += all.len();
        }
    }
    Ok(format!("{total} labels covered exactly once"))
}

fn centralizer_identities() -> Outcome {
    let mut parts = 0;
    for size in 0..=20 {
        for lambda in Partition::all(size) {
            ensure(check_centralizer_identity(&lambda), || format!("identity fails for {lambda}"))?;
            parts += 1;
        }
    }
    let mut labels = 0;
    for n in 0..=8 {
        for r in 2..=4 {
            for label in MultiPartition::enumerate(n, r) {
                let bi = bracket_label(&label).map_err(|e| e.to_string())?;
                let zh = dim_centralizer_symplectic(&bi);
                let zl = dim_centralizer_levi(&label).map_err(|e| e.to_string())?;
                ensure(zh == zl, || format!("{label}: dim Z_H = {zh}, dim Z_L = {zl}"))?;
                labels += 1;
            }
        }
    }
    Ok(format!("{parts} partitions, {labels} multipartitions"))
}

fn witnesses(label: &MultiPartition, q: u64, draws: usize, rng: &mut ChaCha8Rng) -> Vec<EnhancedPoint> {
    let f = common::field(q);
    let mut out = vec![standard_element(label, f)];
    for _ in 0..draws {
        let coeffs = SemiStandardCoeffs::sample(label, f, rng);
        out.push(semi_standard_element(label, f, &coeffs).expect("sampled coefficients are valid"));
    }
    out
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut points = 0;
    for n in 0..=4 {
        for r in 1..=3 {
            for label in MultiPartition::enumerate(n, r) {
                for q in [2, 3, 5] {
                    for p in witnesses(&label, q, 20, &mut rng) {
                        let (got, _) = classify_type(&p).map_err(|e| e.to_string())?;
                        ensure(got == label, || format!("witness of {label} over F_{q} classified as {got}"))?;
                        points += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{points} witnesses"))
}

fn quotient_types() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checks = 0;
    for n in 0..=4 {
        for r in 2..=3 {
            for label in MultiPartition::enumerate(n, r) {
                for q in [2, 3, 5] {
                    for p in witnesses(&label, q, 5, &mut rng) {
                        for i in 1..r {
                            let u = kx_span(p.x(), std::slice::from_ref(p.v(i))).map_err(|e| e.to_string())?;
                            let xi = quotient_type_after_ui(&label, i).map_err(|e| e.to_string())?;
                            let qa = quotient_action(p.x(), &u).map_err(|e| e.to_string())?;
                            let got = jordan_type(&qa).map_err(|e| e.to_string())?;
                            ensure(got == xi, || format!("{label}, i={i}, q={q}: quotient {got}, formula {xi}"))?;
                            let cyc = cyclic_dim_formula(&label, i);
                            ensure(u.dim() == cyc, || format!("{label}, i={i}: dim U_i {} vs {cyc}", u.dim()))?;
                            checks += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checks} quotients"))
}

fn max_module_dimension() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut checks, mut searched) = (0, 0);
    for n in 0..=5 {
        for r in 1..=3 {
            for label in MultiPartition::enumerate(n, r) {
                let ell = label.total().len();
                for q in [2, 3] {
                    for p in witnesses(&label, q, 3, &mut rng) {
                        for a in 0..r {
                            for k in 0..=ell {
                                let formula = max_module_dim_formula(&label, k, a).map_err(|e| e.to_string())?;
                                let oracle = max_module_dim_oracle(&p, k, a).map_err(|e| e.to_string())?;
                                ensure(formula == oracle, || {
                                    format!("{label}, k={k}, a={a}, q={q}: formula {formula}, oracle {oracle}")
                                })?;
                                checks += 1;
                            }
                        }
                    }
                }
                if n <= 3 {
                    let p = standard_element(&label, common::field(2));
                    for a in 0..r {
                        for k in 0..=ell {
                            let formula = max_module_dim_formula(&label, k, a).map_err(|e| e.to_string())?;
                            let best = common::max_module_dim_search(&p, k, a);
                            ensure(formula == best, || {
                                format!("{label}, k={k}, a={a}: formula {formula}, exhaustive search {best}")
                            })?;
                            searched += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checks} formula/oracle pairs, {searched} exhaustive searches at q=2"))
}

/// `λ_i` for `n = 1`: the single box sits in component `r + 1 - i`.
fn n1_label(r: usize, i: usize) -> MultiPartition {
    let mut parts: Vec<&[usize]> = vec![&[]; r];
    parts[r - i] = &[1];
    MultiPartition::from_parts(&parts)
}

fn n1_stratification() -> Outcome {
    let mut cells = 0;
    for q in [2u64, 3, 5, 7] {
        for r in 1..=5 {
            let tally = count_types_for_x(&Partition::row(1), q, r, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let mut total = 0;
            for i in 1..=r {
                let expected = if i == 1 { 1 } else { q.pow(i as u32 - 2) * (q - 1) };
                let got = tally.get(&n1_label(r, i)).copied().unwrap_or(0);
                ensure(got == expected, || format!("q={q}, r={r}, i={i}: counted {got}, expected {expected}"))?;
                total += got;
                cells += 1;
            }
            ensure(tally.len() == r, || format!("q={q}, r={r}: {} types found", tally.len()))?;
            let all = q.pow(r as u32 - 1);
            ensure(total == all, || format!("q={q}, r={r}: total {total} != {all}"))?;
        }
    }
    Ok(format!("{cells} strata counts"))
}

fn n2_r3_fact() -> Outcome {
    let target = MultiPartition::from_parts(&[&[1], &[], &[1]]);
    let mut hits = 0;
    let mut points = 0;
    for q in [2, 3] {
        let f = common::field(q);
        let vectors = common::all_vectors(f, 2);
        for x in common::unipotent_matrices(f, 2) {
            for v1 in &vectors {
                for v2 in &vectors {
                    let p = EnhancedPoint::new(x.clone(), vec![v1.clone(), v2.clone()]).map_err(|e| e.to_string())?;
                    let (ty, _) = classify_type(&p).map_err(|e| e.to_string())?;
                    points += 1;
                    if ty == target {
                        let span = Subspace::span(f, 2, std::slice::from_ref(v1));
                        ensure(span.contains(v2), || {
                            format!("q={q}: point of type {target} with v2 outside span(v1)")
                        })?;
                        hits += 1;
                    }
                }
            }
        }
    }
    ensure(hits > 0, || "no point of type (1;-;1) found".into())?;
    Ok(format!("{hits} of {points} points have type (1;-;1)"))
}

/// Eight primes: seven to fit a polynomial of degree up to 6, one held out.
const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn degree_law() -> Outcome {
    let mut fits = 0;
    for n in 0..=2 {
        for r in 1..=3 {
            for nu in Partition::all(n) {
                let tallies = PRIMES
                    .iter()
                    .map(|&q| count_types_for_x(&nu, q, r, DEFAULT_BUDGET).map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                for label in MultiPartition::enumerate(n, r).into_iter().filter(|l| l.total() == nu) {
                    let fibre: Vec<(u64, u64)> =
                        PRIMES.iter().zip(&tallies).map(|(&q, t)| (q, t.get(&label).copied().unwrap_or(0))).collect();
                    let expected = dim_stratum_fibre(&label) as usize;
                    let report = check_degree(&fibre, expected).map_err(|e| e.to_string())?;
                    ensure(report.passed(), || {
                        format!("{label} over x of type {nu}: N has degree {:?}, expected {expected}", report.degree)
                    })?;

                    let total: Vec<(u64, u64)> = fibre
                        .iter()
                        .map(|&(q, c)| {
                            let s = orbit_size(&nu, q) * BigUint::from(c);
                            (q, u64::try_from(s).expect("stratum counts fit in u64 at this size"))
                        })
                        .collect();
                    let expected = dim_stratum_enhanced(&label) as usize;
                    let report = check_degree(&total, expected).map_err(|e| e.to_string())?;
                    ensure(report.passed(), || {
                        format!("{label}: |X_λ(F_q)| has degree {:?}, expected {expected}", report.degree)
                    })?;
                    fits += 2;
                }
            }
        }
    }
    Ok(format!("{fits} polynomial fits over {} primes", PRIMES.len()))
}

fn completeness() -> Outcome {
    let mut tallies = 0;
    for n in 0..=3 {
        for r in 1..=3 {
            for nu in Partition::all(n) {
                let expected: BTreeSet<_> =
                    MultiPartition::enumerate(n, r).into_iter().filter(|l| l.total() == nu).collect();
                for q in [2u64, 3] {
                    let tally = count_types_for_x(&nu, q, r, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                    let sum: u64 = tally.values().sum();
                    let all = q.pow((n * (r - 1)) as u32);
                    ensure(sum == all, || format!("ν={nu}, r={r}, q={q}: tallies sum to {sum}, not {all}"))?;
                    let found: BTreeSet<_> = tally.keys().cloned().collect();
                    ensure(found == expected, || format!("ν={nu}, r={r}, q={q}: types found differ from the labels over ν"))?;
                    tallies += 1;
                }
            }
        }
    }
    Ok(format!("{tallies} tallies"))
}

fn semismall() -> Outcome {
    let mut rows = 0;
    for n in 0..=6 {
        for r in 1..=4 {
            for case in cases_for(r) {
                for m in LevelComposition::enumerate(n, r, case == Case::Exotic) {
                    for row in springer_table(&m, case).map_err(|e| e.to_string())? {
                        let s = &row.stratum;
                        let codim = s.ambient_dim - s.dim_x;
                        ensure(codim >= 0 && codim % 2 == 0 && codim == 2 * s.d_lambda, || {
                            format!("{} in m={:?} ({case:?}): codim {codim}, d_λ {}", s.label, m.entries(), s.d_lambda)
                        })?;
                        rows += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{rows} table rows"))
}

fn centralizer_orders() -> Outcome {
    let mut checks = 0;
    for q in [2u64, 3] {
        let f = common::field(q);
        for n in 0..=2 {
            let gl = common::gl_count(f, n);
            ensure(gl_order(n, q) == BigUint::from(gl), || format!("|GL_{n}(F_{q})| brute force {gl}"))?;
            for nu in Partition::all(n) {
                let brute = common::centralizer_count(&jordan_matrix(f, &nu));
                let formula = centralizer_order(&nu, q);
                ensure(formula == BigUint::from(brute), || format!("ν={nu}, q={q}: formula {formula}, brute force {brute}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} centralizers"))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        (1, "regular representation and W♮ sums of squares", 5, regular_representation),
        (2, "P̃(m) partition P_(n,r)", 5, correspondence_bijection),
        (3, "centralizer dimension identities", 30, centralizer_identities),
        (4, "classifier/constructor round trip", 120, round_trip),
        (5, "quotient type after U_i", 60, quotient_types),
        (6, "maximum module dimension", 60, max_module_dimension),
        (7, "n=1 stratification counts", 10, n1_stratification),
        (8, "n=2, r=3: type (1;-;1) forces v2 in span(v1)", 60, n2_r3_fact),
        (9, "dimension equals degree of point count", 300, degree_law),
        (10, "type tallies partition the fibre", 600, completeness),
        (11, "semismall arithmetic", 10, semismall),
        (12, "centralizer order vs brute force", 60, centralizer_orders),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {budget}s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{id:>2}] {name}: {detail} ({:.2}s)", elapsed.as_secs_f64());
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
