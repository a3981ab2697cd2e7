//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tensorsq::abelian::AbelianInvariants;
use tensorsq::catalog::catalog;
use tensorsq::cli::{compute, ComputeRequest, Verify};
use tensorsq::group::compat::incompatible_c2_s3_pair;
use tensorsq::group::{abelianization, check_compatible_actions, make_named_group, make_semidirect, ActionPair, FiniteGroup};
use tensorsq::tensor::{property_suite, HomotopyInvariants, Method, TensorOptions, TensorSquare};
use tensorsq::theorems::{green_bound_check, odd_splitting, pi2s_closed_form, verify_semidirect_decomposition, Status};

/// Per-group time limit for the small tables, and the limit for S4.
const SMALL_LIMIT: Duration = Duration::from_secs(60);
const S4_LIMIT: Duration = Duration::from_secs(600);
/// Cell budget for |T| in the tens of thousands (C2^4 has |T| = 65536).
const LARGE_CELLS: usize = 100_000_000;

const TABLE_GROUPS: &[&str] = &["S3", "S4", "D6", "D10", "D8", "D12", "D16", "Q8"];

/// Every abelian group of order at most 16, one per isomorphism type.
const ABELIAN: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C2xC4", "C2xC2xC2", "C9", "C3xC3", "C10", "C11",
    "C12", "C2xC6", "C13", "C14", "C15", "C16", "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2",
];

const ODD: &[&str] = &["C3", "C5", "C7", "C9", "C3xC3", "C15", "sdp(C7,C3,pow2)"];

const DECOMPOSITIONS: &[&str] = &[
    "sdp(C3,C2,inversion)",
    "sdp(C4,C2,inversion)",
    "sdp(C2xC2,C3,cycle)",
    "sdp(C3,C2,trivial)",
];

fn group(spec: &str) -> FiniteGroup {
    if spec.starts_with("sdp(") {
        make_semidirect(spec).unwrap().group
    } else {
        make_named_group(spec).unwrap()
    }
}

fn options(spec: &str) -> TensorOptions {
    match spec {
        "C2xC2xC2xC2" | "C2xC2xC4" => TensorOptions { max_cells: LARGE_CELLS, ..Default::default() },
        _ => TensorOptions::default(),
    }
}

struct Computed {
    square: TensorSquare,
    elapsed: Duration,
}

#[derive(Default)]
struct Cache(BTreeMap<String, Computed>);

impl Cache {
    fn get(&mut self, spec: &str) -> &Computed {
        self.0.entry(spec.to_string()).or_insert_with(|| {
            let start = Instant::now();
            let square = TensorSquare::new(&group(spec), &options(spec))
                .unwrap_or_else(|e| panic!("{spec}: {e}"));
            Computed { square, elapsed: start.elapsed() }
        })
    }
}

struct Outcome {
    failures: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), checked: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn z(f: &[u64]) -> AbelianInvariants {
    AbelianInvariants::finite(f)
}

fn table_values(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    for &spec in TABLE_GROUPS {
        let (pi3, h2, pi2s): (Option<&[u64]>, Option<&[u64]>, &[u64]) = match spec {
            "S3" => (Some(&[2]), None, &[2]),
            "S4" => (Some(&[2, 2]), Some(&[2]), &[2, 2]),
            "D6" | "D10" => (None, None, &[2]),
            "D8" | "D12" | "D16" => (None, None, &[2, 2, 2]),
            "Q8" => (None, None, &[2, 2]),
            _ => unreachable!(),
        };
        let c = cache.get(spec);
        let t = &c.square;
        out.check(t.pi2s() == z(pi2s), || format!("{spec}: pi2s {} != {:?}", t.pi2s(), pi2s));
        if let Some(p) = pi3 {
            out.check(t.pi3() == z(p), || format!("{spec}: pi3 {} != {p:?}", t.pi3()));
        }
        if let Some(h) = h2 {
            out.check(t.h2() == z(h), || format!("{spec}: H2 {} != {h:?}", t.h2()));
        }
        let limit = if spec == "S4" { S4_LIMIT } else { SMALL_LIMIT };
        out.check(c.elapsed <= limit, || format!("{spec}: {:?} over {limit:?}", c.elapsed));
    }
    out
}

fn abelian_agreement(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    for &spec in ABELIAN {
        let g = group(spec);
        let closed = HomotopyInvariants::closed_form(&abelianization(&g)).unwrap();
        let presented = HomotopyInvariants::from_tensor_square(&cache.get(spec).square);
        out.check(presented.pi3 == closed.pi3, || format!("{spec}: pi3 {} vs {}", presented.pi3, closed.pi3));
        out.check(presented.pi2s == closed.pi2s, || format!("{spec}: pi2s {} vs {}", presented.pi2s, closed.pi2s));
        out.check(presented.h2 == closed.h2, || format!("{spec}: H2 {} vs {}", presented.h2, closed.h2));
        out.check(presented.exterior_order == closed.exterior_order, || {
            format!("{spec}: |exterior| {} vs {}", presented.exterior_order, closed.exterior_order)
        });
        out.check(presented.symmetric_order == closed.symmetric_order, || {
            format!("{spec}: |symmetric| {} vs {}", presented.symmetric_order, closed.symmetric_order)
        });
    }
    out
}

fn pi2s_formula(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    let specs = TABLE_GROUPS.iter().chain(ABELIAN).chain(&["A4", "sdp(C7,C3,pow2)"]);
    for &spec in specs {
        let t = &cache.get(spec).square;
        let expected = pi2s_closed_form(&abelianization(t.group()), &t.h2());
        out.check(t.pi2s() == expected, || format!("{spec}: pi2s {} vs formula {}", t.pi2s(), expected));
    }
    out
}

fn odd_order(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    for &spec in ODD {
        let t = &cache.get(spec).square;
        out.check(t.nabla() == t.delta(), || format!("{spec}: nabla != delta"));
        out.check(t.pi2s() == t.h2(), || format!("{spec}: pi2s {} != H2 {}", t.pi2s(), t.h2()));
        let w = odd_splitting(t);
        let n = t.symbols().group_order() as u64;
        out.check(w.status == Status::Pass, || format!("{spec}: splitting {:?}", w.checks.failures()));
        out.check(w.relator_violations == 0 && w.relators_checked == 2 * n * n * n, || {
            format!("{spec}: {} of {} relators violated", w.relator_violations, w.relators_checked)
        });
    }
    out
}

fn decompositions() -> Outcome {
    let mut out = Outcome::new();
    for &spec in DECOMPOSITIONS {
        let sdp = make_semidirect(spec).unwrap();
        let r = verify_semidirect_decomposition(&sdp.action, &TensorOptions::default()).unwrap();
        out.check(r.parts.len() == 5, || format!("{spec}: {} parts", r.parts.len()));
        for p in &r.parts {
            out.check(p.status == Status::Pass, || format!("{spec}: {} {:?}", p.part, p.checks.failures()));
        }
        out.check(r.section_homomorphism, || format!("{spec}: section is not a homomorphism"));
    }
    out
}

fn green(cache: &Cache) -> Outcome {
    let mut out = Outcome::new();
    for (spec, c) in &cache.0 {
        let b = green_bound_check(c.square.group(), &c.square.pi2s());
        out.check(b.status == Status::Pass, || format!("{spec}: {} over {}", b.measured, b.bound));
    }
    out
}

fn properties(cache: &Cache) -> Outcome {
    let mut out = Outcome::new();
    for (spec, c) in &cache.0 {
        let p = property_suite(&c.square);
        out.check(p.passed(), || format!("{spec}: {p:?}"));
    }
    out
}

fn compatibility() -> Outcome {
    let mut out = Outcome::new();
    for r in catalog() {
        let Ok(g) = make_named_group(&r.name) else { continue };
        if g.order() > 24 {
            continue;
        }
        let c = check_compatible_actions(&ActionPair::self_conjugation(&g).unwrap()).unwrap();
        out.check(c.compatible && c.witness.is_none(), || format!("{}: conjugation flagged", r.name));
    }
    let c = check_compatible_actions(&incompatible_c2_s3_pair().unwrap()).unwrap();
    out.check(!c.compatible && c.witness.is_some(), || "C2/S3 pair not flagged".into());
    out
}

fn determinism() -> Outcome {
    let mut out = Outcome::new();
    let request = ComputeRequest {
        method: Method::Presentation,
        check_catalog: true,
        verify: [Verify::All].into_iter().collect(),
        ..Default::default()
    };
    for spec in ["S3", "Q8", "D8", "C3xC3", "sdp(C7,C3,pow2)"] {
        let a = compute(spec, &request).unwrap().report.without_timing().to_json();
        let b = compute(spec, &request).unwrap().report.without_timing().to_json();
        out.check(a == b, || format!("{spec}: reports differ"));
    }
    out
}

fn main() -> ExitCode {
    let mut cache = Cache::default();
    let start = Instant::now();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("table values (S3 S4 D6 D10 D8 D12 D16 Q8)", table_values(&mut cache)),
        ("abelian groups of order <= 16: presentation = closed form", abelian_agreement(&mut cache)),
        ("pi2s = H2 + (Z/2)^(r+k)", pi2s_formula(&mut cache)),
        ("odd order: nabla = delta, pi2s = H2, splitting map", odd_order(&mut cache)),
        ("semidirect decomposition", decompositions()),
        ("Green bound on every computed group", green(&cache)),
        ("property suite on every computed tensor square", properties(&cache)),
        ("compatible actions", compatibility()),
        ("deterministic reports", determinism()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[{verdict}] {}. {name} ({} checks)", i + 1, o.checked);
        for f in &o.failures {
            println!("       {f}");
        }
        if !o.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed, {} groups computed, {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        cache.0.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
