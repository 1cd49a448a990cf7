//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use num_integer::binomial;
use singspec::bounds::{candidate_region, degree_bound, ell, lemma1_region_k2};
use singspec::catalog::j_negative_groups;
use singspec::huh_lists::huh_entries;
use singspec::scalar::{frac, int};
use singspec::search::{enumerate_configurations, SearchOptions};
use singspec::semicontinuity::{candidate_spectrum, check_configuration, test_points};
use singspec::{fermat_spectrum, BigInt, Bound, Configuration, Family, GermKind, Rational, Spectrum};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(triples: &[(i64, i64, u64)]) -> Spectrum {
    Spectrum::from_fractions(triples).unwrap()
}

fn fermat_spectra() -> Outcome {
    let f53: Spectrum = fermat_spectrum(5, 3).map_err(|e| e.to_string())?;
    let f43: Spectrum = fermat_spectrum(4, 3).map_err(|e| e.to_string())?;
    ensure(f53 == spec(&[(2, 3, 1), (1, 1, 5), (4, 3, 10), (5, 3, 10), (2, 1, 5), (7, 3, 1)]), || {
        format!("f53 = {f53}")
    })?;
    ensure(f43 == spec(&[(1, 3, 1), (2, 3, 4), (1, 1, 6), (4, 3, 4), (5, 3, 1)]), || format!("f43 = {f43}"))?;
    let mid = f53.deg_window(&Bound::Finite(int(1)), &Bound::Finite(int(2)), true, true).unwrap();
    let low = f53.deg_window(&Bound::NegInf, &Bound::Finite(int(1)), true, true).unwrap();
    ensure((mid, low) == (20, 1), || format!("deg ]1,2[ = {mid}, deg ]-inf,1[ = {low}"))
}

fn catalog_consistency() -> Outcome {
    let (lo, hi) = (int::<BigInt>(-1), int::<BigInt>(1));
    let mut checked = 0;
    for kind in GermKind::up_to_milnor(200, &Family::ALL) {
        if !kind.is_weighted_homogeneous() {
            continue;
        }
        let mu = kind.milnor().unwrap();
        let generated: Spectrum = kind.curve_spectrum().map_err(|e| format!("{kind}: {e}"))?;
        let row = kind.table_spectrum::<BigInt>().map_err(|e| format!("{kind}: {e}"))?;
        ensure(row.spectrum == generated, || format!("{kind}: table row differs"))?;
        ensure(row.discrepancy.is_some() == matches!(kind, GermKind::E6r1(_)), || format!("{kind}: discrepancy flag"))?;
        ensure(generated.total() == mu, || format!("{kind}: total {} != {mu}", generated.total()))?;
        ensure(generated.is_symmetric(&int(0)), || format!("{kind}: not symmetric"))?;
        ensure(generated.iter().all(|(a, _)| lo < *a && *a < hi), || format!("{kind}: outside ]-1,1["))?;
        checked += 1;
    }
    let e7: Spectrum = "E7".parse::<GermKind>().unwrap().curve_spectrum().unwrap();
    let want = spec(&[(-4, 9, 1), (-2, 9, 1), (-1, 9, 1), (0, 1, 1), (1, 9, 1), (2, 9, 1), (4, 9, 1)]);
    ensure(e7 == want, || format!("E7 = {e7}"))?;
    ensure(checked > 100, || format!("only {checked} classes checked"))
}

fn j_family() -> Outcome {
    for kind in GermKind::up_to_milnor(200, &[Family::J]) {
        let GermKind::J(k, i) = kind else { unreachable!() };
        let s: Spectrum = kind.curve_spectrum().map_err(|e| format!("{kind}: {e}"))?;
        ensure(s.total() == u64::from(6 * k - 2 + i), || format!("{kind}: total {}", s.total()))?;
        ensure(s.is_symmetric(&int(0)), || format!("{kind}: not symmetric"))?;
        if i > 0 {
            let [_, second] = j_negative_groups::<BigInt>(k, i);
            ensure(second.iter().all(|(a, _)| *a > frac(-1, 2)), || format!("{kind}: group 2 reaches -1/2"))?;
        }
    }
    let j24: Spectrum = "J2_4".parse::<GermKind>().unwrap().curve_spectrum().unwrap();
    let neg = j24.negative_part().total();
    let zero = j24.multiplicity(&int(0));
    ensure((neg, zero) == (6, 2), || format!("J2_4: {neg} negative, multiplicity {zero} at 0"))
}

fn list_polar_degrees() -> Outcome {
    let entries = huh_entries().map_err(|e| e.to_string())?;
    ensure(entries.len() == 15, || format!("{} entries", entries.len()))?;
    for e in &entries {
        let pol = e.config.polar_degree().map_err(|err| format!("{}: {err}", e.id))?;
        ensure(pol == e.pol, || format!("{}: pol {pol} != {}", e.id, e.pol))?;
        ensure(check_configuration::<BigInt>(&e.config, true).unwrap().holds, || format!("{}: semicontinuity", e.id))?;
    }
    Ok(())
}

fn emptiness() -> Outcome {
    let opts = SearchOptions::for_polar_degree(2).unwrap();
    let search = |n, d| enumerate_configurations(n, d, 2, &opts).map_err(|e| e.to_string());
    for (n, d) in [(5, 3), (4, 3)] {
        let r = search(n, d)?;
        ensure(r.survivors.is_empty(), || format!("({n},{d},2) has {} survivors", r.survivors.len()))?;
    }
    let has = |r: &singspec::search::SearchReport, germs: &[&str]| {
        r.survivors.contains(&Configuration::parse(r.n, r.d, germs).unwrap())
    };
    let r = search(3, 3)?;
    for germs in [&["E6"][..], &["A5", "A1"], &["A2", "A2", "A2"]] {
        ensure(has(&r, germs), || format!("(3,3,2) lacks {germs:?}"))?;
    }
    let r = search(2, 3)?;
    for germs in [&["A2"][..], &["A1", "A1"]] {
        ensure(has(&r, germs), || format!("(2,3,2) lacks {germs:?}"))?;
    }
    Ok(())
}

fn bounds() -> Outcome {
    for (n, k, want) in [(2, 2, 1), (2, 5, 2), (3, 0, 0), (3, 2, 1)] {
        ensure(ell(n, k) == want, || format!("ell({n},{k}) = {}", ell(n, k)))?;
    }
    for (n, k, want) in [(2, 2, 12), (3, 2, 8), (2, 5, 28)] {
        let b = degree_bound(n, k).map_err(|e| e.to_string())?;
        ensure(b == Rational::from_integer(want.into()), || format!("degree_bound({n},{k}) = {b}"))?;
    }
    let refined: BTreeSet<(u32, u32)> = [(3, 3), (3, 4), (4, 3), (5, 3)].into();
    ensure(lemma1_region_k2() == refined, || format!("refined region {:?}", lemma1_region_k2()))?;
    let r2 = candidate_region(2).map_err(|e| e.to_string())?;
    for (n, d) in [(2, 3), (2, 4), (2, 5), (3, 3)] {
        ensure(r2.contains(n, d), || format!("({n},{d}) missing from region(2)"))?;
    }
    for k in 2..=10 {
        let r = candidate_region(k).map_err(|e| e.to_string())?;
        ensure(!r.pairs.is_empty() && r.pairs.len() < 100_000, || format!("region({k}) has {} pairs", r.pairs.len()))?;
    }
    Ok(())
}

fn properties() -> Outcome {
    for d in 2..=6u32 {
        let one: Spectrum = fermat_spectrum(1, d).unwrap();
        let mut acc = one.clone();
        for n in 2..=6u32 {
            acc = acc.join(&one);
            ensure(acc == fermat_spectrum(n, d).unwrap(), || format!("join != fermat at n={n}, d={d}"))?;
        }
    }

    let mut seed = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = |m: u64| {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed % m
    };
    let pool = GermKind::up_to_milnor(12, &Family::ALL);
    let mut tested = 0;
    while tested < 100 {
        let (n, d) = (2 + next(3) as u32, 3 + next(3) as u32);
        let c = Configuration::new(n, d, (0..1 + next(3)).map(|_| pool[next(pool.len() as u64) as usize])).unwrap();
        if c.polar_degree().is_err() {
            continue;
        }
        tested += 1;
        if !check_configuration::<BigInt>(&c, false).unwrap().holds {
            continue;
        }
        let cand: Spectrum = candidate_spectrum(&c).unwrap();
        let target: Spectrum = fermat_spectrum(n, d).unwrap();
        for a in test_points(&cand, &target) {
            let lo = Bound::Finite(a);
            let l = cand.deg_window(&lo, &Bound::PosInf, true, true).unwrap();
            let r = target.deg_window(&lo, &Bound::PosInf, true, true).unwrap();
            ensure(l <= r, || format!("ray inequality fails for {c}"))?;
        }
    }

    for _ in 0..100 {
        let mut random = || {
            let len = next(5);
            let triples: Vec<(i64, i64, u64)> =
                (0..len).map(|_| (next(16) as i64 - 8, 1 + next(4) as i64, 1 + next(2))).collect();
            Spectrum::from_fractions(&triples).unwrap()
        };
        let (cand, target) = (random(), random());
        for kind in [singspec::WindowKind::OpenClosed, singspec::WindowKind::OpenOpen] {
            let scan = singspec::semicontinuity::check(&cand, &target, kind).holds;
            let dense = (-10 * 240..10 * 240).all(|i| {
                let a = frac::<BigInt>(i, 240);
                cand.unit_window(&a, kind) <= target.unit_window(&a, kind)
            });
            ensure(scan == dense, || format!("scan {scan} vs dense {dense} for {cand} against {target}"))?;
        }
    }

    for n in 1..=8u32 {
        for d in 2..=8u32 {
            let s: Spectrum = fermat_spectrum(n, d).unwrap();
            for j in 0..=d - 2 {
                let alpha = frac::<BigInt>(i64::from(n + j) - i64::from(d), i64::from(d));
                let want = binomial(u64::from(n + j - 1), u64::from(n - 1));
                ensure(s.multiplicity(&alpha) == want, || format!("v_{j} for n={n}, d={d}"))?;
            }
        }
    }
    Ok(())
}

fn determinism() -> Outcome {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_singspec"))
            .args(["--json", "search", "3", "3", "2", "--threads", threads])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        Ok::<_, String>(out.stdout)
    };
    let serial = run("1")?;
    let parallel = run("4")?;
    ensure(!serial.is_empty() && serial == parallel, || "serial and parallel JSON differ".into())?;
    let out = Command::new(env!("CARGO_BIN_EXE_singspec"))
        .args(["--json", "search", "5", "3", "2", "--threads", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    let par = Command::new(env!("CARGO_BIN_EXE_singspec"))
        .args(["--json", "search", "5", "3", "2"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.stdout == par.stdout, || "serial and parallel JSON differ for (5,3,2)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Fermat spectra and window degrees", fermat_spectra),
        ("2 catalog rows match generating functions", catalog_consistency),
        ("3 J family", j_family),
        ("4 polar degrees of the bundled lists", list_polar_degrees),
        ("5 emptiness for cubic threefolds and fourfolds", emptiness),
        ("6 dimension and degree bounds", bounds),
        ("7 property suites", properties),
        ("8 deterministic search output", determinism),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(msg) => {
                println!("FAIL criterion {name}: {msg}");
                failed += 1;
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
