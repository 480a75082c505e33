//! One pass/fail line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use gdminors::cmcheck::{
    is_cm_predicted, reisner_cm, validate_certificate, vd_certificate_triangles,
};
use gdminors::complex::{
    self, facets_with, height, height_formula_triangles, is_face, is_pure, is_pure_predicted,
    paths_engine_supports, Engine, EnumOptions,
};
use gdminors::groebner::{initial_ideal_gens, verify_groebner};
use gdminors::multiplicity::{
    brute_nonintersecting, lgv_det, multiplicity_by_count, multiplicity_formula, triangle_corners,
    PathBudget, PathEndpoints,
};
use gdminors::stairs::{
    is_maximal_kstair, is_succ_sorted, longest_diagonal, satisfies_f, scrape, scrape_sequence,
    stair_decomposition, stair_number, tendril_sizes,
};
use gdminors::{Cell, CellSet, GDMatrix, MinorsProblem};
use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn problems(
    ns: std::ops::RangeInclusive<usize>,
    rs: std::ops::RangeInclusive<usize>,
    max_cells: usize,
) -> Vec<MinorsProblem> {
    let mut out = Vec::new();
    for n in ns.clone() {
        for m in ns.clone() {
            for x in common::all_shapes(n, m) {
                if x.num_cells() > max_cells {
                    continue;
                }
                for r in rs.clone() {
                    if let Ok(p) = MinorsProblem::new(x.clone(), r) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn headline_multiplicity() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_gdminors"))
        .args([
            "multiplicity",
            "--n",
            "4",
            "--m",
            "4",
            "--t1",
            "0",
            "--t2",
            "0",
            "--r",
            "3",
            "--method",
            "both",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    ensure(v["multiplicity"] == "20" && v["agree"] == true, || {
        format!("report {v}")
    })?;
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!(
        "multiplicity 20, formula and count agree, {} ms",
        took.as_millis()
    ))
}

fn scrape_golden() -> Outcome {
    let m = GDMatrix::generic(5, 6).unwrap();
    let c = CellSet::from_pairs(&[
        (1, 5),
        (1, 6),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 5),
        (3, 6),
        (4, 4),
        (4, 5),
        (5, 2),
        (5, 3),
        (5, 4),
        (5, 5),
    ]);
    let want: Vec<Cell> = [
        (5, 2),
        (5, 3),
        (5, 4),
        (4, 4),
        (2, 4),
        (2, 5),
        (1, 5),
        (1, 6),
    ]
    .into_iter()
    .map(Cell::from)
    .collect();
    let got = scrape_sequence(&m, &c);
    ensure(got == want, || format!("scraped {got:?}"))?;
    let mut full = c.clone();
    full.extend([(3, 4), (4, 1), (4, 2), (4, 3), (5, 1)].map(Cell::from));
    ensure(full.len() == 18 && is_maximal_kstair(&m, &full, 2), || {
        "augmented set is not a maximal 2-stair".into()
    })?;
    Ok("scrape golden sequence and 18-cell maximal 2-stair".into())
}

fn pinched_counterexample() -> Outcome {
    let x = GDMatrix::new(3, 3, vec![2, 1], vec![2]).unwrap();
    let p = MinorsProblem::new(x, 3).unwrap();
    let want = vec![
        CellSet::from_pairs(&[(1, 1), (1, 2), (2, 2)]),
        CellSet::from_pairs(&[(1, 1), (1, 2), (3, 3)]),
        CellSet::from_pairs(&[(1, 2), (2, 2), (3, 3)]),
    ];
    let got = complex::facets(&p).map_err(|e| e.to_string())?;
    ensure(got == want, || format!("facets {got:?}"))?;
    let d = stair_decomposition(p.matrix(), &want[0], 2).map_err(|e| e.to_string())?;
    let t = [
        CellSet::from_pairs(&[(1, 1), (1, 2)]),
        CellSet::from_pairs(&[(2, 2)]),
    ];
    ensure(d.tendrils == t, || format!("tendrils {:?}", d.tendrils))?;
    Ok(format!(
        "three facets, tendril sizes {:?}",
        tendril_sizes(&d)
    ))
}

fn height_sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (n, m, t1, t2, x) in common::triangle_instances(2..=5, 2) {
        for r in 2..=3.min(n).min(m) {
            let p = MinorsProblem::new(x.clone(), r).unwrap();
            if p.ideal_is_zero() {
                continue;
            }
            let h = height(&p).map_err(|e| e.to_string())?;
            let want = height_formula_triangles(n, m, t1, t2, r);
            ensure(h == want, || {
                format!("{n}x{m} t=({t1},{t2}) r={r}: height {h}, formula {want}")
            })?;
            ensure(is_pure(&p).unwrap(), || {
                format!("{n}x{m} t=({t1},{t2}) r={r} is impure")
            })?;
            count += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!(
        "{count} instances, heights match and complexes are pure"
    ))
}

fn multiplicity_sweep() -> Outcome {
    let mut count = 0;
    for (n, m, t1, t2, x) in common::triangle_instances(2..=5, 2) {
        for r in 2..=3.min(n).min(m) {
            let p = MinorsProblem::new(x.clone(), r).unwrap();
            let c = multiplicity_by_count(&p).map_err(|e| e.to_string())?;
            let f = multiplicity_formula(n, m, t1, t2, r).map_err(|e| e.to_string())?;
            ensure(c.pure && c.top == f, || {
                format!("{n}x{m} t=({t1},{t2}) r={r}: formula {f}, count {}", c.top)
            })?;
            count += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    let mut systems = 0;
    while systems < 50 {
        let (n, m) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let r = rng.gen_range(2..=4.min(n).min(m));
        let (a, b) = triangle_corners(n, m, rng.gen_range(0..n), rng.gen_range(0..m), r);
        let pick = |v: &[(i64, i64)], rng: &mut StdRng| {
            let mut idx = sample(rng, v.len(), r - 1).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| v[i]).collect::<Vec<_>>()
        };
        let (a, b) = (pick(&a, &mut rng), pick(&b, &mut rng));
        let e = PathEndpoints::new(b, a).unwrap();
        let Ok(brute) = brute_nonintersecting(&e, &PathBudget::default()) else {
            continue;
        };
        ensure(lgv_det(&e) == brute, || {
            format!("{e:?}: det {} brute {brute}", lgv_det(&e))
        })?;
        systems += 1;
    }
    Ok(format!(
        "{count} instances formula = count, {systems} endpoint systems det = brute"
    ))
}

fn groebner_sweep() -> Outcome {
    let all = problems(2..=4, 2..=3, usize::MAX);
    for p in &all {
        let rep = verify_groebner(p).map_err(|e| e.to_string())?;
        ensure(rep.groebner, || {
            format!(
                "{:?} r={}: {:?}",
                p.matrix().spec(),
                p.r(),
                rep.failing_pair
            )
        })?;
    }
    let small: Vec<&MinorsProblem> = all
        .iter()
        .filter(|p| p.matrix().num_cells() <= 12)
        .collect();
    for p in &small {
        let x = p.matrix();
        let gens = initial_ideal_gens(p);
        ensure(gens.iter().all(|g| g.is_square_free()), || {
            "generator is not square-free".into()
        })?;
        let supports: Vec<CellSet> = gens.iter().map(|g| g.support(x)).collect();
        let cells = x.cells();
        for s in 0u32..1 << cells.len() {
            let f: CellSet = (0..cells.len())
                .filter(|i| s >> i & 1 == 1)
                .map(|i| cells[i])
                .collect();
            let avoids = supports.iter().all(|g| !g.is_subset(&f));
            ensure(is_face(p, &f) == avoids, || {
                format!("{:?} r={}: {f}", x.spec(), p.r())
            })?;
        }
    }
    Ok(format!(
        "{} instances are Groebner bases, {} checked against faces",
        all.len(),
        small.len()
    ))
}

fn cm_characterization() -> Outcome {
    let all = problems(2..=6, 2..=3, 12);
    let mut negatives = 0;
    for p in &all {
        let k = complex::complex(p).map_err(|e| e.to_string())?;
        let (pred, actual) = (
            is_cm_predicted(p),
            reisner_cm(&k).map_err(|e| e.to_string())?,
        );
        ensure(pred == actual, || {
            format!(
                "{:?} r={}: predicted {pred}, reisner {actual}",
                p.matrix().spec(),
                p.r()
            )
        })?;
        negatives += usize::from(!actual);
    }
    let neg = MinorsProblem::new(GDMatrix::new(4, 4, vec![2, 2], vec![]).unwrap(), 2).unwrap();
    let k = complex::complex(&neg).unwrap();
    ensure(!is_cm_predicted(&neg) && !reisner_cm(&k).unwrap(), || {
        "4x4 c=(2,2) r=2 should not be CM".into()
    })?;
    Ok(format!("{} instances agree, {negatives} not CM", all.len()))
}

fn vd_certificates() -> Outcome {
    let mut count = 0;
    for (n, m, t1, t2, x) in common::triangle_instances(2..=4, 2) {
        for r in 2..=3.min(n).min(m) {
            let p = MinorsProblem::new(x.clone(), r).unwrap();
            let cert = vd_certificate_triangles(&p)
                .map_err(|e| format!("{n}x{m} t=({t1},{t2}) r={r}: {e}"))?;
            let v = validate_certificate(&p, &cert);
            ensure(v.valid, || {
                format!(
                    "{n}x{m} t=({t1},{t2}) r={r}: {:?} at {:?}",
                    v.reason, v.failing_path
                )
            })?;
            let k = complex::complex(&p).unwrap();
            ensure(reisner_cm(&k).unwrap(), || {
                format!("{n}x{m} t=({t1},{t2}) r={r} fails Reisner")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} certificates validated, all Cohen-Macaulay"
    ))
}

fn min_stair_cover(cells: &[Cell]) -> usize {
    let n = cells.len();
    let full = (1usize << n) - 1;
    let free: Vec<bool> = (0..=full)
        .map(|s| {
            let v: Vec<&Cell> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| &cells[i])
                .collect();
            v.iter().all(|a| v.iter().all(|b| !a.precedes(b)))
        })
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let a = sub | low;
            if free[a] {
                best[s] = best[s].min(best[s & !a] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

fn property_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut subsets = 0;
    for n in 2..=5 {
        for m in 2..=5 {
            for x in common::all_shapes(n, m) {
                let cells = x.cells();
                for _ in 0..4 {
                    let c: CellSet = cells
                        .iter()
                        .filter(|_| rng.gen_bool(0.5))
                        .copied()
                        .collect();
                    if c.len() <= 12 {
                        ensure(stair_number(&x, &c) == min_stair_cover(&c.to_vec()), || {
                            format!("Mirsky fails on {c}")
                        })?;
                    }
                    let seq = scrape_sequence(&x, &c);
                    let s: CellSet = seq.iter().copied().collect();
                    let rest = c.difference(&s);
                    ensure(
                        is_succ_sorted(&seq) && s.is_subset(&c) && satisfies_f(&s, 2),
                        || format!("scrape of {c}"),
                    )?;
                    ensure(scrape(&x, &s) == s, || {
                        format!("scrape of a stair {s} moved")
                    })?;
                    ensure(
                        longest_diagonal(&rest) == longest_diagonal(&c).saturating_sub(1),
                        || format!("peeling {c}"),
                    )?;
                    subsets += 1;
                }
            }
        }
    }
    let all = problems(2..=4, 2..=3, 16);
    let mut facets_seen = 0;
    for p in &all {
        let general = complex::facets(p).map_err(|e| e.to_string())?;
        if paths_engine_supports(p) {
            let paths = facets_with(
                p,
                &EnumOptions {
                    engine: Engine::Paths,
                    ..Default::default()
                },
            )
            .unwrap();
            ensure(paths == general, || {
                format!("engines disagree on {:?} r={}", p.matrix().spec(), p.r())
            })?;
        }
        if !p.ideal_is_zero() {
            let corners = p.corner_cells();
            for f in &general {
                ensure(corners.is_subset(f), || {
                    format!("facet {f} misses a corner triangle")
                })?;
                let d = stair_decomposition(p.matrix(), f, p.r() - 1).map_err(|e| e.to_string())?;
                let mut union = corners.clone();
                for (i, t) in d.tendrils.iter().enumerate() {
                    ensure(d.tendrils[i + 1..].iter().all(|u| t.is_disjoint(u)), || {
                        format!("tendrils of {f} overlap")
                    })?;
                    union = union.union(t);
                }
                ensure(&union == f, || format!("tendrils of {f} do not cover it"))?;
                facets_seen += 1;
            }
        }
    }
    let mut two = 0;
    for p in problems(2..=5, 2..=2, 20) {
        let (pred, pure) = (is_pure_predicted(&p).unwrap(), is_pure(&p).unwrap());
        ensure(!pred || pure, || {
            format!("{:?} predicted pure but is not", p.matrix().spec())
        })?;
        if p.matrix().without_zero_lines().matrix.is_unpinched() {
            ensure(pred == pure, || {
                format!(
                    "{:?} unpinched: predicted {pred}, pure {pure}",
                    p.matrix().spec()
                )
            })?;
        }
        two += 1;
    }
    Ok(format!(
        "{subsets} random subsets, {facets_seen} facets, {two} r=2 purity instances"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("headline multiplicity", headline_multiplicity),
        ("scrape golden", scrape_golden),
        ("pinched counterexample", pinched_counterexample),
        ("height sweep", height_sweep),
        ("multiplicity sweep", multiplicity_sweep),
        ("groebner verification", groebner_sweep),
        ("cm characterization", cm_characterization),
        ("vertex decomposability", vd_certificates),
        ("property suite", property_suite),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
