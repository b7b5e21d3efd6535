//! Invariant suites behind `verify`. Each check names the identity it
//! exercises in its `anchor` field.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use springer_levels::field::{jordan_type, kx_span, quotient_action, random_invertible, PrimeField, Subspace, Vector};
use springer_levels::orbits::{
    classify_type, max_module_dim_formula, max_module_dim_oracle, quotient_type_after_ui,
    semi_standard_element, standard_element, EnhancedPoint, SemiStandardCoeffs,
};
use springer_levels::partitions::{
    bracket_label, bracket_nu, check_centralizer_identity, dim_centralizer_levi, dim_centralizer_symplectic,
    rectangular_decomposition, Case, LevelComposition, MultiPartition, Partition,
};
use springer_levels::pointcount::{centralizer_order, count_types_for_x, gl_order, orbit_size};
use springer_levels::reflection::{
    dim_irrep_wnr, dim_irrep_wnr_from_wnat, regular_rep_check, springer_table, wnat_sum_of_squares,
};

use crate::{Cli, Format, Outcome, Suite};

type Check = Result<String, String>;

#[derive(Serialize)]
struct CheckRecord {
    suite: &'static str,
    name: &'static str,
    anchor: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct Inputs {
    suite: &'static str,
    max_n: Option<usize>,
    seed: u64,
    budget: u128,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Inputs,
    checks: Vec<CheckRecord>,
    passed: usize,
    failed: usize,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cases_for(r: usize) -> Vec<Case> {
    if r >= 2 {
        vec![Case::Exotic, Case::Enhanced]
    } else {
        vec![Case::Enhanced]
    }
}

struct Ctx {
    cap: usize,
    seed: u64,
    budget: u128,
}

impl Ctx {
    fn n(&self, bound: usize) -> usize {
        bound.min(self.cap)
    }
}

// combinatorics

fn dominance_order(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(5) {
        for r in 1..=3 {
            let all = MultiPartition::enumerate(n, r);
            for a in &all {
                ensure(a.dominance_le(a).map_err(err)?, || format!("{a} not <= itself"))?;
                for b in &all {
                    let ab = a.dominance_le(b).map_err(err)?;
                    if ab && b.dominance_le(a).map_err(err)? {
                        ensure(a == b, || format!("{a} and {b} dominate each other"))?;
                    }
                    if !ab {
                        continue;
                    }
                    for d in &all {
                        if b.dominance_le(d).map_err(err)? {
                            ensure(a.dominance_le(d).map_err(err)?, || format!("{a} <= {b} <= {d} fails"))?;
                        }
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} labels"))
}

fn tilde_union(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(6) {
        for r in 2..=4 {
            let mut seen = BTreeSet::new();
            for m in LevelComposition::enumerate(n, r, true) {
                for l in m.tilde_labels().map_err(err)? {
                    ensure(seen.insert(l.clone()), || format!("{l} appears twice"))?;
                }
            }
            let all: BTreeSet<_> = MultiPartition::enumerate(n, r).into_iter().collect();
            ensure(seen == all, || format!("union differs from P_({n},{r})"))?;
            count += all.len();
        }
    }
    Ok(format!("{count} labels"))
}

fn rectangles(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(20) {
        for nu in Partition::all(n) {
            ensure(nu.dual().dual() == nu, || format!("dual of dual of {nu}"))?;
            let sum = rectangular_decomposition(&nu)
                .into_iter()
                .fold(Partition::empty(), |acc, (a, k)| acc.add_pointwise(&Partition::rectangle(a, k)));
            ensure(sum == nu, || format!("rectangles of {nu} sum to {sum}"))?;
            ensure(bracket_nu(&nu).size() == n, || format!("|[{nu}]| != {n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} partitions"))
}

fn semismall(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(6) {
        for r in 1..=4 {
            for case in cases_for(r) {
                for m in LevelComposition::enumerate(n, r, case == Case::Exotic) {
                    for row in springer_table(&m, case).map_err(err)? {
                        let s = &row.stratum;
                        let codim = s.ambient_dim - s.dim_x;
                        ensure(codim >= 0 && codim % 2 == 0 && codim == 2 * s.d_lambda, || {
                            format!("{} in {m}: codimension {codim}, d_lambda {}", s.label, s.d_lambda)
                        })?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} rows"))
}

// identities

fn regular_rep(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(8) {
        for r in 1..=4 {
            ensure(regular_rep_check(n, r), || format!("n={n}, r={r}"))?;
            count += 1;
        }
    }
    for n in 0..=c.n(6) {
        for r in 1..=4 {
            for case in cases_for(r) {
                for m in LevelComposition::enumerate(n, r, case == Case::Exotic) {
                    ensure(wnat_sum_of_squares(&m, case).map_err(err)?, || format!("m={m} ({case:?})"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} groups"))
}

fn centralizer_identities(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(20) {
        for nu in Partition::all(n) {
            ensure(check_centralizer_identity(&nu), || format!("{nu}"))?;
            count += 1;
        }
    }
    for n in 0..=c.n(8) {
        for r in 2..=4 {
            for l in MultiPartition::enumerate(n, r) {
                let zh = dim_centralizer_symplectic(&bracket_label(&l).map_err(err)?);
                let zl = dim_centralizer_levi(&l).map_err(err)?;
                ensure(zh == zl, || format!("{l}: {zh} vs {zl}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases"))
}

fn induced_dimensions(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(6) {
        for r in 2..=4 {
            for m in LevelComposition::enumerate(n, r, true) {
                for l in m.tilde_labels().map_err(err)? {
                    let direct = dim_irrep_wnr(&l);
                    let induced = dim_irrep_wnr_from_wnat(&l, &m).map_err(err)?;
                    ensure(direct == induced, || format!("{l}: {direct} vs {induced}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} labels"))
}

// classifier

fn witnesses(label: &MultiPartition, q: u64, draws: usize, rng: &mut ChaCha8Rng) -> Result<Vec<EnhancedPoint>, String> {
    let f = PrimeField::new(q).map_err(err)?;
    let mut out = vec![standard_element(label, f)];
    for _ in 0..draws {
        let coeffs = SemiStandardCoeffs::sample(label, f, rng);
        out.push(semi_standard_element(label, f, &coeffs).map_err(err)?);
    }
    Ok(out)
}

fn round_trip(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut count = 0;
    for n in 0..=c.n(4) {
        for r in 1..=3 {
            for l in MultiPartition::enumerate(n, r) {
                for q in [2, 3, 5] {
                    for p in witnesses(&l, q, 20, &mut rng)? {
                        let (got, _) = classify_type(&p).map_err(err)?;
                        ensure(got == l, || format!("witness of {l} over F_{q} classified as {got}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} witnesses"))
}

fn conjugation(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut count = 0;
    for n in 0..=c.n(3) {
        for r in 1..=3 {
            for l in MultiPartition::enumerate(n, r) {
                let p = witnesses(&l, 3, 1, &mut rng)?.pop().expect("one draw");
                for _ in 0..10 {
                    let g = random_invertible(p.field(), n, &mut rng);
                    let (got, _) = classify_type(&p.conjugate(&g).map_err(err)?).map_err(err)?;
                    ensure(got == l, || format!("conjugate of a {l} witness classified as {got}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} conjugates"))
}

fn quotient_types(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut count = 0;
    for n in 0..=c.n(4) {
        for r in 2..=3 {
            for l in MultiPartition::enumerate(n, r) {
                for q in [2, 3, 5] {
                    for p in witnesses(&l, q, 5, &mut rng)? {
                        for i in 1..r {
                            let u = kx_span(p.x(), std::slice::from_ref(p.v(i))).map_err(err)?;
                            let got = jordan_type(&quotient_action(p.x(), &u).map_err(err)?).map_err(err)?;
                            let xi = quotient_type_after_ui(&l, i).map_err(err)?;
                            ensure(got == xi, || format!("{l}, i={i}: quotient {got}, formula {xi}"))?;
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{count} quotients"))
}

fn module_dims(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut count = 0;
    for n in 0..=c.n(5) {
        for r in 1..=3 {
            for l in MultiPartition::enumerate(n, r) {
                for p in witnesses(&l, 3, 2, &mut rng)? {
                    for a in 0..r {
                        for k in 0..=l.total().len() {
                            let f = max_module_dim_formula(&l, k, a).map_err(err)?;
                            let o = max_module_dim_oracle(&p, k, a).map_err(err)?;
                            ensure(f == o, || format!("{l}, k={k}, a={a}: formula {f}, oracle {o}"))?;
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{count} pairs"))
}

fn all_vectors(f: PrimeField, dim: usize) -> Vec<Vector> {
    let q = f.q();
    (0..q.pow(dim as u32))
        .map(|mut idx| {
            let e = (0..dim)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    d
                })
                .collect();
            Vector::new(f, e).expect("digits are reduced")
        })
        .collect()
}

fn n2_r3_span(c: &Ctx) -> Check {
    if c.cap < 2 {
        return Ok("skipped below n = 2".into());
    }
    let target = MultiPartition::from_parts(&[&[1], &[], &[1]]);
    let mut hits = 0;
    for q in [2, 3] {
        let f = PrimeField::new(q).map_err(err)?;
        let vectors = all_vectors(f, 2);
        for entries in all_vectors(f, 4) {
            let e = entries.entries();
            let x = springer_levels::field::Matrix::from_rows(f, vec![e[..2].to_vec(), e[2..].to_vec()]).map_err(err)?;
            if jordan_type(&x).is_err() {
                continue;
            }
            for v1 in &vectors {
                for v2 in &vectors {
                    let p = EnhancedPoint::new(x.clone(), vec![v1.clone(), v2.clone()]).map_err(err)?;
                    if classify_type(&p).map_err(err)?.0 == target {
                        let span = Subspace::span(f, 2, std::slice::from_ref(v1));
                        ensure(span.contains(v2), || format!("q={q}: v2 outside span(v1)"))?;
                        hits += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{hits} points of type {target}"))
}

// counting

fn n1_strata(c: &Ctx) -> Check {
    if c.cap < 1 {
        return Ok("skipped below n = 1".into());
    }
    let mut count = 0;
    for q in [2u64, 3, 5, 7] {
        for r in 1..=5 {
            let tally = count_types_for_x(&Partition::row(1), q, r, c.budget).map_err(err)?;
            for i in 1..=r {
                let mut parts: Vec<&[usize]> = vec![&[]; r];
                parts[r - i] = &[1];
                let label = MultiPartition::from_parts(&parts);
                let expected = if i == 1 { 1 } else { q.pow(i as u32 - 2) * (q - 1) };
                let got = tally.get(&label).copied().unwrap_or(0);
                ensure(got == expected, || format!("q={q}, r={r}, {label}: {got} vs {expected}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} strata"))
}

fn completeness(c: &Ctx) -> Check {
    let mut count = 0;
    for n in 0..=c.n(3) {
        for r in 1..=3 {
            for nu in Partition::all(n) {
                for q in [2u64, 3] {
                    let tally = count_types_for_x(&nu, q, r, c.budget).map_err(err)?;
                    let sum: u64 = tally.values().sum();
                    let all = q.pow((n * (r - 1)) as u32);
                    ensure(sum == all, || format!("nu={nu}, r={r}, q={q}: {sum} vs {all}"))?;
                    ensure(tally.keys().all(|l| l.total() == nu), || format!("nu={nu}: foreign type"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} tallies"))
}

fn group_orders(c: &Ctx) -> Check {
    let mut count = 0;
    for q in [2u64, 3, 5, 7] {
        for n in 0..=c.n(5) {
            for nu in Partition::all(n) {
                ensure(orbit_size(&nu, q) * centralizer_order(&nu, q) == gl_order(n, q), || format!("nu={nu}, q={q}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} orbits"))
}

fn degree_law(c: &Ctx) -> Check {
    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let mut count = 0;
    for n in 0..=c.n(2) {
        for r in 1..=3 {
            for nu in Partition::all(n) {
                let tallies = PRIMES
                    .iter()
                    .map(|&q| count_types_for_x(&nu, q, r, c.budget).map_err(err))
                    .collect::<Result<Vec<_>, _>>()?;
                for l in MultiPartition::enumerate(n, r).into_iter().filter(|l| l.total() == nu) {
                    let samples: Vec<(u64, u64)> =
                        PRIMES.iter().zip(&tallies).map(|(&q, t)| (q, t.get(&l).copied().unwrap_or(0))).collect();
                    let expected = springer_levels::partitions::dim_stratum_fibre(&l) as usize;
                    let report = springer_levels::pointcount::check_degree(&samples, expected).map_err(err)?;
                    ensure(report.passed(), || format!("{l}: degree {:?}, expected {expected}", report.degree))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} fits"))
}

type CheckFn = fn(&Ctx) -> Check;

const CHECKS: &[(Suite, &str, &str, CheckFn)] = &[
    (Suite::Combinatorics, "dominance", "dominance is a partial order on multipartitions", dominance_order),
    (Suite::Combinatorics, "tilde-union", "disjoint union of P~(m) over m is P(n,r)", tilde_union),
    (Suite::Combinatorics, "rectangles", "rectangular decomposition and [nu] preserve size", rectangles),
    (Suite::Combinatorics, "semismall", "ambient - dim X = 2 d_lambda >= 0", semismall),
    (Suite::Identities, "regular-representation", "sum of squared irreducible dimensions is the group order", regular_rep),
    (Suite::Identities, "centralizer-dimensions", "n(lambda) = |lambda| + 2n([lambda]) - |nu'| and dim Z_H = dim Z_L", centralizer_identities),
    (Suite::Identities, "induced-dimensions", "dim V_lambda = multinomial * dim of the W-natural module", induced_dimensions),
    (Suite::Classifier, "round-trip", "type of a (semi-)standard witness is its label", round_trip),
    (Suite::Classifier, "conjugation", "type is constant on GL_n-orbits", conjugation),
    (Suite::Classifier, "quotient-type", "x on V/k[x]v_i has the predicted Jordan type", quotient_types),
    (Suite::Classifier, "module-dimension", "largest k[x]-module through v_a and k free vectors", module_dims),
    (Suite::Classifier, "n2-r3-span", "type (1;-;1) forces v2 in k v1", n2_r3_span),
    (Suite::Counting, "n1-strata", "n = 1 strata have 1 and q^(i-2)(q-1) points", n1_strata),
    (Suite::Counting, "completeness", "types partition the q^(n(r-1)) points over x", completeness),
    (Suite::Counting, "group-orders", "orbit size * centralizer order = |GL_n(F_q)|", group_orders),
    (Suite::Counting, "degree-law", "degree of N_(lambda,x)(q) is dim X_(lambda,x)", degree_law),
];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Combinatorics => "combinatorics",
        Suite::Identities => "identities",
        Suite::Classifier => "classifier",
        Suite::Counting => "counting",
        Suite::All => "all",
    }
}

pub fn run(cli: &Cli, suite: Suite, max_n: Option<usize>) -> Result<Outcome> {
    let ctx = Ctx { cap: max_n.unwrap_or(usize::MAX), seed: cli.seed, budget: cli.budget };
    let start = Instant::now();
    let checks: Vec<CheckRecord> = CHECKS
        .iter()
        .filter(|(s, ..)| suite == Suite::All || *s == suite)
        .map(|&(s, name, anchor, f)| {
            let (passed, detail) = match f(&ctx) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckRecord { suite: suite_name(s), name, anchor, passed, detail }
        })
        .collect();
    eprintln!("elapsed: {:.2}s", start.elapsed().as_secs_f64());
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = RunReport {
        command: "verify",
        inputs: Inputs { suite: suite_name(suite), max_n, seed: cli.seed, budget: cli.budget },
        passed: checks.len() - failed,
        failed,
        checks,
    };
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &report.checks {
                w.serialize(c)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    };
    Ok(if failed == 0 { Outcome::Ok(text) } else { Outcome::ChecksFailed(text) })
}
