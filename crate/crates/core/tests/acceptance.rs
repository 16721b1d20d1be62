//! End-to-end acceptance run: one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use ellded::exact::dim_data;
use ellded::verify::{
    apostol_reciprocity, default_elliptic_cases, default_suite, kronecker, thm11, to_json_lines,
    CheckRecord, Family, VerifyOptions,
};
use ellded::qseries::TauPoint;

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn worst(records: &[CheckRecord], prefix: &str) -> (bool, usize, f64) {
    let picked: Vec<&CheckRecord> = records.iter().filter(|r| r.check.starts_with(prefix)).collect();
    let pass = !picked.is_empty() && picked.iter().all(|r| r.pass);
    let max = picked
        .iter()
        .filter_map(|r| r.residual.as_f64())
        .fold(0.0_f64, f64::max);
    (pass, picked.len(), max)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Runs every criterion. The map records, for criteria that cannot be met
/// in binary64, whether the observed failure matches the known cause.
fn run_all() -> (Vec<Outcome>, BTreeMap<u32, bool>) {
    let opts = VerifyOptions::default();
    let mut out = Vec::new();
    let mut explained = BTreeMap::new();

    let (recs, dt) = timed(|| apostol_reciprocity(&[2, 4, 6, 8, 10], 30).unwrap());
    let exact = recs.iter().all(|r| r.pass && r.residual == "0/1");
    out.push(Outcome {
        id: 1,
        title: "exact Apostol reciprocity",
        pass: exact && !recs.is_empty() && dt < Duration::from_secs(10),
        detail: format!("{} cases, {:.2?}", recs.len(), dt),
    });

    let (recs, dt) = timed(|| thm11(&default_elliptic_cases(), &opts).unwrap());
    let (pass, count, max) = worst(&recs, "thm11.reciprocity");
    out.push(Outcome {
        id: 2,
        title: "elliptic reciprocity",
        pass: pass && count == 20 && dt < Duration::from_secs(30),
        detail: format!("{count} cases, max residual {max:.2e}, {dt:.2?}"),
    });

    let (p1, c1, m1) = worst(&recs, "thm11.periodicity");
    let (p2, c2, m2) = worst(&recs, "thm11.oddness");
    out.push(Outcome {
        id: 3,
        title: "symbol axioms",
        pass: p1 && p2,
        detail: format!("periodicity {c1} max {m1:.2e}, oddness {c2} max {m2:.2e}"),
    });

    let recs = default_suite(Family::Limit, &opts).unwrap();
    let (pa, ca, ma) = worst(&recs, "limit.apostol");
    let (pm, _, _) = worst(&recs, "limit.monotone");
    let (pd, _, _) = worst(&recs, "limit.decay");
    let at_floor = recs.iter().filter(|r| r.check == "limit.monotone").all(|r| {
        let v = r.value.as_ref().unwrap();
        (0..2).all(|i| v["residuals"][i].as_f64().unwrap() <= v["rounding"][i].as_f64().unwrap())
    });
    out.push(Outcome {
        id: 4,
        title: "degeneration at the cusp",
        pass: pa && pm && ca == 3,
        detail: format!(
            "{ca} cases, max residual at 20i {ma:.2e}, 20i below 10i {pm}, \
             both within rounding {at_floor}, strict decay over t=1..5 {pd}"
        ),
    });
    explained.insert(4, pa && pd && at_floor);

    let recs = default_suite(Family::Thm13, &opts).unwrap();
    let (pc, _, mc) = worst(&recs, "thm13.constancy");
    let (pv, _, mv) = worst(&recs, "thm13.constant");
    out.push(Outcome {
        id: 5,
        title: "generating-function constant",
        pass: pc && pv,
        detail: format!("spread {mc:.2e}, constant {mv:.2e}"),
    });

    let recs = default_suite(Family::Prop31, &opts).unwrap();
    let (pc, _, mc) = worst(&recs, "prop31.constancy");
    let (pv, _, mv) = worst(&recs, "prop31.constant");
    let (pf, _, mf) = worst(&recs, "prop31.closed-form");
    out.push(Outcome {
        id: 6,
        title: "B1 double-sum law",
        pass: pc && pv && pf,
        detail: format!("spread {mc:.2e}, constant {mv:.2e}, closed form {mf:.2e}"),
    });

    let recs = default_suite(Family::Lemma32, &opts).unwrap();
    let (p, c, m) = worst(&recs, "lemma32");
    out.push(Outcome {
        id: 7,
        title: "Machide coefficient identities",
        pass: p && c == 6,
        detail: format!("{c} identities, max {m:.2e}"),
    });

    let (recs, dt) = timed(|| default_suite(Family::Eq73, &opts).unwrap());
    let (pe, ce, me) = worst(&recs, "eq73");
    let (pv, _, mv) = worst(&recs, "eq73.van-der-pol");
    out.push(Outcome {
        id: 8,
        title: "Eisenstein identities",
        pass: pe && pv && dt < Duration::from_secs(10),
        detail: format!("{ce} residuals max {me:.2e}, van der Pol {mv:.2e}, {dt:.2?}"),
    });

    let recs = default_suite(Family::Eq64, &opts).unwrap();
    let (p, c, m) = worst(&recs, "eq64");
    out.push(Outcome {
        id: 9,
        title: "one-dimensional spectral expansion",
        pass: p && c == 10,
        detail: format!("{c} cases, max relative {m:.2e}"),
    });

    let recs = default_suite(Family::BasisRank, &opts).unwrap();
    let never_exceeds = recs.iter().all(|r| {
        let rank = r.value.as_ref().unwrap()["rank"].as_u64().unwrap();
        let w = r.params["w"].as_u64().unwrap() as u32;
        rank <= dim_data(w).unwrap().1 as u64
    });
    let ranks: Vec<String> = recs
        .iter()
        .map(|r| r.value.as_ref().unwrap()["rank"].to_string())
        .collect();
    out.push(Outcome {
        id: 10,
        title: "basis rank",
        pass: never_exceeds && recs.len() == 7 && recs.iter().all(|r| r.pass),
        detail: format!("ranks for w=2..14: {}", ranks.join(",")),
    });

    let recs = thm11(&default_elliptic_cases(), &opts).unwrap();
    let (pr, cr, mr) = worst(&recs, "thm11.routes");
    let mut kron = Vec::new();
    for tau in [TauPoint::from_parts(0.0, 1.0).unwrap(), TauPoint::from_parts(0.3, 1.1).unwrap()] {
        kron.extend(kronecker(&[3, 4], 0.25, 0.4, &tau, 400, &opts).unwrap());
        kron.extend(kronecker(&[3, 4], 0.6, 0.15, &tau, 400, &opts).unwrap());
    }
    let (pk, ck, mk) = worst(&kron, "kronecker");
    out.push(Outcome {
        id: 11,
        title: "cross-route oracles",
        pass: pr && pk,
        detail: format!("{cr} route pairs max {mr:.2e}, {ck} lattice sums max {mk:.2e}"),
    });

    let mut same = true;
    for family in [Family::Thm11, Family::BasisRank, Family::Lemma32] {
        let a = to_json_lines(&default_suite(family, &opts).unwrap());
        let b = to_json_lines(&default_suite(family, &opts).unwrap());
        same &= a == b;
    }
    out.push(Outcome {
        id: 12,
        title: "determinism",
        pass: same,
        detail: "repeated runs compared byte for byte".into(),
    });

    (out, explained)
}

fn main() {
    let (outcomes, explained) = run_all();
    for o in &outcomes {
        println!(
            "criterion {:>2} {} {}: {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.title,
            o.detail
        );
    }
    let unexplained: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.pass && !explained.get(&o.id).copied().unwrap_or(false))
        .map(|o| o.id)
        .collect();
    if !unexplained.is_empty() {
        eprintln!("failed criteria: {unexplained:?}");
        std::process::exit(1);
    }
}
