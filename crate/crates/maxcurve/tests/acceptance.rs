//! One test per acceptance criterion. Each prints a `PASS`/`FAIL` line before asserting.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use maxcurve::curve_models::*;
use maxcurve::genus_catalog::{self, Kind, KindArgs, QuotientSpec, Table1Row};
use maxcurve::gf::{FieldElement, FieldSpec};
use maxcurve::group_action::*;
use maxcurve::point_count::{count_points, count_points_in, CountOptions};
use num_bigint::BigInt;

fn report(id: u32, what: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS criterion {id}: {what}: {detail}"),
        Err(detail) => {
            println!("FAIL criterion {id}: {what}: {detail}");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, label: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("{label} took {t:?}, limit {limit:?}"))
}

fn single_thread() -> CountOptions {
    CountOptions {
        threads: Some(1),
        allow_long: false,
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn suzuki_q8_maximal_over_f4096() {
    let out = (|| {
        let p = params_from_s(Family::SuzukiCover, 1).unwrap();
        let expected = 4096 + 1 + 2 * 196 * 64;
        let start = Instant::now();
        let rep = count_points(&p, 4, &CountOptions::default()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(1), "count")?;
        check(rep.points == expected, || {
            format!("default modulus: {} != {expected}", rep.points)
        })?;
        check(rep.is_maximal, || "not maximal".into())?;
        let mut coeffs = [0u8; 13];
        coeffs[0] = 1;
        coeffs[5] = 1;
        coeffs[12] = 1;
        let alt = FieldSpec::new(2, 12, Some(&coeffs)).map_err(|e| e.to_string())?;
        let rep2 =
            count_points_in(&alt, &p, 4, &CountOptions::default()).map_err(|e| e.to_string())?;
        check(rep2.points == expected, || {
            format!("{}: {} != {expected}", rep2.modulus, rep2.points)
        })?;
        Ok(format!(
            "{} places under {} and {}",
            rep.points, rep.modulus, rep2.modulus
        ))
    })();
    report(1, "Suzuki q=8 count over F_2^12", out);
}

#[test]
fn suzuki_q32_maximal_over_f2_20() {
    let out = (|| {
        let p = params_from_s(Family::SuzukiCover, 2).unwrap();
        let ell = 1u64 << 20;
        let expected = ell + 1 + 2 * 15376 * (1 << 10);
        check(genus(&p) == big(15376), || format!("genus {}", genus(&p)))?;
        let start = Instant::now();
        let rep = count_points(&p, 4, &single_thread()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(120), "single-threaded count")?;
        check(rep.points == expected, || {
            format!("{} != {expected}", rep.points)
        })?;
        Ok(format!("{} places in {:?}", rep.points, rep.wall_time))
    })();
    report(2, "Suzuki q=32 count over F_2^20", out);
}

#[test]
fn ree_q27_has_only_fq_rational_places_below_degree_4() {
    let out = (|| {
        let p = params_from_s(Family::ReeCover, 1).unwrap();
        let start = Instant::now();
        let mut seen = Vec::new();
        for r in 1..=3 {
            let rep = count_points(&p, r, &CountOptions::default()).map_err(|e| e.to_string())?;
            check(rep.points == 19684, || {
                format!("F_3^{}: {} != 19684", 3 * r, rep.points)
            })?;
            seen.push(rep.points);
        }
        within(start, Duration::from_secs(10), "three counts")?;
        Ok(format!("{seen:?}"))
    })();
    report(3, "Ree q=27 counts over F_3^3, F_3^6, F_3^9", out);
}

fn places() -> &'static PlaceSet {
    static P: OnceLock<PlaceSet> = OnceLock::new();
    P.get_or_init(|| build_places(&params_from_s(Family::SuzukiCover, 1).unwrap()).unwrap())
}

fn gens() -> &'static Generators {
    static G: OnceLock<Generators> = OnceLock::new();
    G.get_or_init(|| generators(places()).unwrap())
}

#[test]
fn q8_two_orbits() {
    let out = (|| {
        let sizes = orbits(places().len(), &gens().all());
        check(places().len() == 29185, || {
            format!("{} places", places().len())
        })?;
        check(sizes == vec![65, 29120], || {
            format!("orbit sizes {sizes:?}")
        })?;
        Ok(format!("{sizes:?}"))
    })();
    report(4, "orbits of the automorphism group at q=8", out);
}

#[test]
fn q8_contribution_table() {
    let out = (|| {
        let p = places();
        let f = p.field();
        let g = gens();
        let one = f.constant(1);
        let zero = FieldElement::ZERO;
        let mut rows = Vec::new();
        let mut expect =
            |label: &str, a: &Automorphism, ord: u64, fixed: usize| -> Result<(), String> {
                let (o, fx) = (element_order(a), fixed_points(a));
                check(o == ord && fx == fixed, || {
                    format!("{label}: order {o} fixed {fx}, want order {ord} fixed {fixed}")
                })?;
                rows.push(format!("{label}={fx}"));
                Ok(())
            };
        for k in 1..5 {
            expect(&format!("tau^{k}"), &power(&g.gamma, k), 5, 65)?;
        }
        let a = g.fq_primitive;
        let s7 = gen_stabilizer(p, a, zero, zero, f.pow(a, g.delta_exponent as u128))
            .map_err(|e| e.to_string())?;
        expect("order7", &s7, 7, 2)?;
        let s2 = gen_stabilizer(p, one, zero, one, one).map_err(|e| e.to_string())?;
        expect("order2", &s2, 2, 1)?;
        let s4 = gen_stabilizer(p, one, one, zero, one).map_err(|e| e.to_string())?;
        expect("order4", &s4, 4, 1)?;
        let simple = g.simple_part();
        let s13 = search_order(&simple, 13, SEARCH_SEED).map_err(|e| e.to_string())?;
        expect("order13", &s13, 13, 0)?;
        let s5 = search_order(&simple, 5, SEARCH_SEED).map_err(|e| e.to_string())?;
        expect("order5", &s5, 5, 0)?;
        let twisted: Vec<usize> = (1..5)
            .map(|j| fixed_points(&compose(&s5, &power(&g.gamma, j))))
            .collect();
        let hits = twisted.iter().filter(|&&c| c == 20).count();
        check(hits == 1, || {
            format!("fixed counts of sigma*gamma^j for j=1..4 are {twisted:?}; want exactly one j with 20")
        })?;
        Ok(rows.join(" "))
    })();
    report(5, "brute-force fixed-point counts at q=8", out);
}

#[test]
fn dual_path_formulas_agree() {
    let out = (|| {
        let mut notes = Vec::new();
        for (fam, s, base_genus) in [
            (Family::SuzukiCover, 1, Some(14u64)),
            (Family::SuzukiCover, 2, None),
            (Family::ReeCover, 1, Some(3627)),
        ] {
            let p = params_from_s(fam, s).unwrap();
            let sp = genus_catalog::spectrum(&p);
            let cover = genus(&p);
            for r in &sp.records {
                check(r.genus >= big(0) && r.genus <= cover, || {
                    format!("{}: genus {}", r.spec, r.genus)
                })?;
                if let Some(mm) = &r.mismatch {
                    check(mm.documented.is_some(), || {
                        format!("{}: closed {} vs {}", r.spec, mm.closed, r.genus)
                    })?;
                }
            }
            let v = genus_catalog::boundary_violations(&sp);
            check(v.is_empty(), || format!("{v:?}"))?;
            let trivial_kind = if p.is_suzuki() {
                Kind::SzB1
            } else {
                Kind::ReP1
            };
            let mk = |n| QuotientSpec {
                kind: trivial_kind,
                params: p,
                args: KindArgs {
                    r: Some(1),
                    n,
                    ..Default::default()
                },
            };
            let g1 = genus_catalog::genus_via_delta(&mk(1)).map_err(|e| e.to_string())?;
            check(g1 == cover, || format!("trivial spec gives {g1}"))?;
            let gm = genus_catalog::genus_via_delta(&mk(p.m)).map_err(|e| e.to_string())?;
            let base = genus(&p.with_family(fam.base()));
            check(gm == base, || {
                format!("C_m spec gives {gm}, base genus {base}")
            })?;
            if let Some(b) = base_genus {
                check(base == big(b), || format!("base genus {base} != {b}"))?;
            }
            notes.push(format!(
                "q={}: {} specs, {} documented mismatches",
                p.q,
                sp.records.len(),
                sp.mismatches().count()
            ));
        }
        Ok(notes.join("; "))
    })();
    report(6, "closed forms against the different-degree path", out);
}

#[test]
fn new_genera_table_contained() {
    let out = (|| {
        let start = Instant::now();
        let mut missing = Vec::new();
        let mut notes = Vec::new();
        for row in Table1Row::ALL {
            let (fam, s) = row.family_s();
            let sp = genus_catalog::spectrum(&params_from_s(fam, s).unwrap());
            let v = genus_catalog::table1_check(row, &sp);
            notes.push(format!(
                "{} {}/{}",
                v.row,
                row.values().len() - v.missing.len(),
                row.values().len()
            ));
            if !v.contained {
                missing.push(format!("{} missing {:?}", v.row, v.missing));
            }
        }
        within(start, Duration::from_secs(60), "three spectra")?;
        check(missing.is_empty(), || missing.join("; "))?;
        Ok(notes.join(" "))
    })();
    report(7, "table of new genera contained in the spectra", out);
}

#[test]
fn hermitian_identities() {
    let out = (|| {
        let sz = params_from_s(Family::SuzukiCover, 1).unwrap();
        let (lo, hi) = hermitian_window(&sz);
        check((lo.clone(), hi.clone()) == (big(9), big(10)), || {
            format!("window [{lo}, {hi}]")
        })?;
        let r9 = hermitian_cover_analysis(&sz, &big(9)).map_err(|e| e.to_string())?;
        check(
            r9.delta == big(520) && r9.delta == big(8 * 8 * 8 + 8),
            || format!("delta(9) = {}", r9.delta),
        )?;

        let re = params_from_s(Family::ReeCover, 1).unwrap();
        let q = re.q_big();
        let order = (&q + 1u32) * (&q + 1u32);
        let r = hermitian_cover_analysis(&re, &order).map_err(|e| e.to_string())?;
        let want = &q * 3u32 * (q.pow(3) + 1u32);
        check(r.delta == want, || {
            format!("delta = {}, want 3q(q^3+1) = {want}", r.delta)
        })?;
        let g = hermitian_quotient_genus(&re, &order, &r.delta).ok_or("non-integral genus")?;
        check(g == genus(&re), || format!("genus {g} != {}", genus(&re)))?;
        Ok(format!(
            "window [9, 10], delta(9) = 520, Ree delta = {}, genus {g}",
            r.delta
        ))
    })();
    report(8, "Hermitian quotient identities", out);
}
