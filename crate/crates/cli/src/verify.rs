use std::fmt::Write as _;

use serde_json::json;

use convexlat::convexgen::{
    classify_finiteness, completion_points, regular_pentagon, saturate, verify_extreme_lemma, verify_iso_theorem,
    Budget, Finiteness,
};
use convexlat::geom::{Configuration, Point};
use convexlat::relative::{census, equivalent, invariant_profile, CensusOptions, NamedConfig, PROFILE_SHAPES};
use convexlat::words::{check_contiguity_lemma, check_symmetry, derived_points, standard_v5};

const TABLE_ROWS: [NamedConfig; 4] = [NamedConfig::L(4), NamedConfig::T(3), NamedConfig::I(0, 2), NamedConfig::I(1, 1)];

fn invariant_table(out: &mut String) -> serde_json::Value {
    let profiles: Vec<_> = TABLE_ROWS.iter().map(|z| invariant_profile(&z.build())).collect();
    let _ = write!(out, "{:<8}", "");
    for z in TABLE_ROWS {
        let _ = write!(out, "{:>7}", z.to_string());
    }
    out.push('\n');
    let mut rows = serde_json::Map::new();
    for shape in &PROFILE_SHAPES[..4] {
        let vals: Vec<u64> = profiles.iter().map(|p| p.count(*shape)).collect();
        let _ = write!(out, "{:<8}", format!("#{shape}"));
        for v in &vals {
            let _ = write!(out, "{v:>7}");
        }
        out.push('\n');
        rows.insert(format!("#{shape}"), json!(vals));
    }
    let rext: Vec<usize> = profiles.iter().map(|p| p.rext_size).collect();
    let _ = write!(out, "{:<8}", "|Rext|");
    for v in &rext {
        let _ = write!(out, "{v:>7}");
    }
    out.push('\n');
    rows.insert("|Rext|".into(), json!(rext));
    serde_json::Value::Object(rows)
}

fn checks() -> Vec<(&'static str, bool)> {
    let budget = Budget::new(8, 50_000);
    let table_ok = {
        let p: Vec<_> = TABLE_ROWS.iter().map(|z| invariant_profile(&z.build())).collect();
        let col = |s: NamedConfig| p.iter().map(|q| q.count(s)).collect::<Vec<_>>();
        col(NamedConfig::L(1)) == [4, 4, 4, 4]
            && col(NamedConfig::L(2)) == [6, 6, 6, 6]
            && col(NamedConfig::L(3)) == [4, 1, 0, 0]
            && col(NamedConfig::T(2)) == [0, 3, 4, 4]
            && p.iter().map(|q| q.rext_size).collect::<Vec<_>>() == [2, 3, 3, 4]
    };
    let census_ok =
        census(&CensusOptions::new(3, 5)).classes.len() == 2 && census(&CensusOptions::new(4, 5)).classes.len() == 4;
    let finite = [NamedConfig::L(7), NamedConfig::T(5), NamedConfig::D(2, 3), NamedConfig::I(1, 4), NamedConfig::S6];
    let finite_ok = finite.iter().all(|z| {
        let x = z.build();
        classify_finiteness(&x).verdict == Finiteness::FiniteGenerating
            && saturate(&x, &budget).is_ok_and(|g| g.is_saturated())
    });
    let infinite_ok = [regular_pentagon(), NamedConfig::V5.build()]
        .iter()
        .all(|x| classify_finiteness(x).verdict == Finiteness::InfiniteGenerating);
    let completion_ok = completion_points(&NamedConfig::I(1, 1).build(), &budget).is_ok_and(|r| {
        r.new_points == [Point::int(0, 0)] && equivalent(&r.completed(), &NamedConfig::D(1, 1).build()).is_some()
    });
    let iso_ok = [NamedConfig::L(3), NamedConfig::L(5), NamedConfig::T(4), NamedConfig::D(1, 1), NamedConfig::D(2, 2)]
        .iter()
        .map(|z| z.build())
        .chain(completion_points(&NamedConfig::S6.build(), &budget).ok().map(|r| r.completed()))
        .collect::<Vec<Configuration>>();
    let iso_ok = iso_ok.len() == 6
        && iso_ok.iter().all(|x| {
            verify_iso_theorem(x, &budget).is_ok_and(|r| r.holds())
                && verify_extreme_lemma(x, &budget).is_ok_and(|r| r.holds())
        });
    let derived_ok = derived_points(&standard_v5())
        .is_ok_and(|(cp, c)| cp == Point::frac(2, 3, 2, 3) && c == Point::frac(1, 2, 1, 2));
    let words_ok = check_contiguity_lemma(5).is_ok_and(|r| r.counterexamples.is_empty())
        && check_symmetry(5).is_ok_and(|r| r.holds());
    vec![
        ("invariant table", table_ok),
        ("census n=3,4 on 5x5 grid", census_ok),
        ("finite generating battery", finite_ok),
        ("infinite generating battery", infinite_ok),
        ("completion of I1,1", completion_ok),
        ("isomorphism theorem and extreme points", iso_ok),
        ("V5 derived points", derived_ok),
        ("word contiguity and symmetry to depth 5", words_ok),
    ]
}

/// Runs the battery; returns the report and whether everything passed.
pub fn battery(as_json: bool, header: &serde_json::Value, text_header: &str) -> (String, bool) {
    let mut table = String::new();
    let table_json = invariant_table(&mut table);
    let results = checks();
    let ok = results.iter().all(|(_, p)| *p);
    if as_json {
        let checks: serde_json::Map<String, serde_json::Value> =
            results.iter().map(|(n, p)| (n.to_string(), json!(p))).collect();
        let v = json!({"header": header, "invariant_table": table_json, "checks": checks, "pass": ok});
        let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
        s.push('\n');
        return (s, ok);
    }
    let mut out = text_header.to_string();
    out.push_str(&table);
    out.push('\n');
    for (name, pass) in results {
        let _ = writeln!(out, "{} {name}", if pass { "PASS" } else { "FAIL" });
    }
    (out, ok)
}
