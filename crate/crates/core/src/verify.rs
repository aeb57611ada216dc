//! Named checks of the structural and numerical claims about the graph.
//!
//! Each check returns a [`VerifyReport`] with one record per assertion. A
//! failing record always carries both the expected and the actual value.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::dn::{classify_dn_coset_rep, dn_coset_representatives};
use crate::error::{Error, Result};
use crate::finite::FiniteGroup;
use crate::graph::{E0Graph, ValencyDistribution};
use crate::infinite::{
    ball_graph_diameter_evidence, product_diameter_check, universal_neighborhood, BallGraph, DiameterVerdict,
    GeometricGroup, UniversalInvolution,
};
use crate::pendant::{predicted_pendants, PendantReport};
use crate::spec::GroupSpec;
use crate::symn::{delta, delta_bruteforce, delta_closed_form, wlog_check};

/// Published valency distributions for type A.
pub const TYPE_A_ROWS: [(&str, &str); 4] = [
    ("A3", "0^1.1^3.2^1.3^1.4^3"),
    ("A4", "0^1.1^4.2^2.3^6.4^3.6^3.7^2.12^4"),
    ("A5", "0^1.1^5.2^3.3^{13}.4^7.5^2.7^{15}.8^1.9^8.10^1.13^4.15^1.19^9.37^5"),
    (
        "A6",
        "0^1.1^6.2^4.3^{23}.4^9.5^6.6^9.7^{22}.8^4.9^{27}.10^4.11^{10}.12^7.13^8.14^2.15^{10}.16^3.19^{12}.21^{4}.\
         22^{12}.24^2.25^5.27^8.29^2.31^4.39^2.41^5.55^4.59^{10}115^6",
    ),
];

/// Published valency distributions for the exceptional types. The flag marks
/// rows that need the heavy option.
pub const EXCEPTIONAL_ROWS: [(&str, bool, &str); 4] = [
    ("H3", false, "0^1.1^3.2^4.3^5.4^4.5^5.7^2.8^2.9^2.15^3"),
    (
        "F4",
        false,
        "0^1.1^4.2^8.3^9.4^{17}.5^{11}.6^9.7^9.8^{10}.9^{13}.10^2.11^6.12^4.13^4.14^4.15^2.17^4.18^1.19^2.\
         21^2.23^2.25^2.29^2.30^2.34^3.37^2.69^4",
    ),
    (
        "H4",
        true,
        "0^1. 1^{4}.2^{8}.3^{12}.4^{23}.5^{23}.6^{27}.7^{26}.8^{38}.9^{24}.10^{19}.11^{23}.12^{25}.13^{22}.\
         14^ {30}.15^{30}.16^{16}.17^{14}.18^{18}.19^{12}.20^{7}.21^{15}.22^{10}.23^{5}.24^{11}.25^{8}.26^{5}.\
         27^{8}.28^{7}.29^{3}.30^{5}.31^{6}.32^{4}.33^{5}.34^{3}.35^{2}.36^{3}.37^1.38^2.39^3.40^1.42^3.43^4.\
         44^1.45^2.46^2.47^2.48^2.49^1.50^5.51^1.54^3.55^1. 59^1.61^2.62^3.63^1.65^2.70^1.71^1.79^1.81^1.\
         82^1.83^1.87^2.89^2.97^2.99^1.119^1.122^1.137^2.143^3.173^2.285^4",
    ),
    (
        "E6",
        true,
        "0^1.1^6.2^{14}.3^{34}.4^{35}.5^{33}.6^{15}.7^{56}.8^{30}.9^{58}.10^{25}.11^{52}.12^{17}.13^{28}.\
         14^{19}.15^{25}.16^{25}.17^{24}.18^{11}.19^{40}.20^{15}.21^{16}.22^5.23^9.24^{12}.25^{13}.26^{13}.\
         27^{18}.28^{14}.29^{7}.30^{11}.31^6.32^4.33^{14}.35^3.36^2.37^{11}.38^{12}.39^6.40^2.41^6.43^{13}.\
         44^9.45^5.46^7.47^7.49^1.50^2.51^2.53^2.54^4.56^2.58^2.59^4. 62^2.68^3.69^1.70^2.71^2.72^4.73^2.\
         74^2.75^1.77^4.80^2.82^{10}.89^9.91^1.95^2.118^6.137^1.141^2.155^7.171^5.227^{10}.445^6",
    ),
];

/// Finite groups on which the structural claims are checked.
pub fn finite_suite() -> Vec<String> {
    let mut out: Vec<String> = ["A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "D6", "F4", "H3"]
        .iter()
        .map(ToString::to_string)
        .collect();
    out.extend((3..=12).map(|m| format!("I2({m})")));
    out.push("A1xA1".into());
    out.push("A2xA2".into());
    out
}

/// Irreducible groups on which the pendant classification is checked; the
/// flag marks groups that need the heavy option.
pub fn pendant_suite() -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> =
        ["A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "D4", "D5", "D6", "D7", "F4", "H3"]
            .iter()
            .map(|s| (s.to_string(), false))
            .collect();
    out.push(("H4".into(), true));
    out.push(("E6".into(), true));
    out.extend((3..=12).map(|m| (format!("I2({m})"), false)));
    out
}

pub const CHECK_NAMES: [&str; 13] = [
    "table1",
    "table2",
    "thm-diam",
    "cor-highval",
    "thm-samecard-pairing",
    "thm-valency",
    "thm-pendant",
    "cor-lwn",
    "lem-i2m",
    "lem-lendown",
    "thm-dn-cosets",
    "lem-universal",
    "lem-product",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Detail {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub status: Status,
    pub details: Vec<Detail>,
}

impl VerifyReport {
    fn new(check: &str, details: Vec<Detail>) -> Self {
        let status = if details.iter().any(|d| d.status == Status::Fail) {
            Status::Fail
        } else if !details.is_empty() && details.iter().all(|d| d.status == Status::Skipped) {
            Status::Skipped
        } else {
            Status::Pass
        };
        VerifyReport { check: check.to_string(), status, details }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| d.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.details.iter().filter(|d| d.status == status).count()
    }
}

fn detail(claim: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display, ok: bool) -> Detail {
    Detail {
        claim: claim.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

fn skipped(claim: impl Into<String>, why: &str) -> Detail {
    Detail { claim: claim.into(), expected: String::new(), actual: why.to_string(), status: Status::Skipped }
}

fn error_detail(claim: impl Into<String>, e: &Error) -> Detail {
    detail(claim, "success", format!("error: {e}"), false)
}

/// Runs checks, caching groups and graphs between them.
pub struct Verifier {
    heavy: bool,
    progress: Box<dyn FnMut(&str)>,
    cache: HashMap<String, Rc<(FiniteGroup, E0Graph)>>,
}

impl Verifier {
    pub fn new(heavy: bool) -> Self {
        Verifier { heavy, progress: Box::new(|_| {}), cache: HashMap::new() }
    }

    /// Reports each group as its graph is built.
    pub fn with_progress(mut self, progress: impl FnMut(&str) + 'static) -> Self {
        self.progress = Box::new(progress);
        self
    }

    pub fn heavy(&self) -> bool {
        self.heavy
    }

    fn load(&mut self, label: &str) -> Result<Rc<(FiniteGroup, E0Graph)>> {
        if let Some(hit) = self.cache.get(label) {
            return Ok(hit.clone());
        }
        (self.progress)(&format!("building {label}"));
        let group = FiniteGroup::from_label(label)?;
        let graph = E0Graph::build(&group);
        let entry = Rc::new((group, graph));
        self.cache.insert(label.to_string(), entry.clone());
        Ok(entry)
    }

    pub fn run(&mut self, name: &str) -> Result<VerifyReport> {
        let details = match name {
            "table1" => self.table1(),
            "table2" => self.table2(),
            "thm-diam" => self.diameter(),
            "cor-highval" => self.high_valency(),
            "thm-samecard-pairing" => self.same_cardinality(),
            "thm-valency" => self.valency_recursion(),
            "thm-pendant" => self.pendants(),
            "cor-lwn" => self.pendant_counts(),
            "lem-i2m" => self.dihedral(),
            "lem-lendown" => self.length_steps(),
            "thm-dn-cosets" => self.dn_cosets(),
            "lem-universal" => self.universal(),
            "lem-product" => self.products(),
            other => {
                return Err(Error::Unsupported(format!(
                    "unknown check {other:?}; expected one of {}",
                    CHECK_NAMES.join(", ")
                )))
            }
        };
        Ok(VerifyReport::new(name, details))
    }

    pub fn run_all(&mut self) -> Vec<VerifyReport> {
        CHECK_NAMES.iter().map(|n| self.run(n).expect("known check")).collect()
    }

    fn compare_row(&mut self, label: &str, published: &str) -> Detail {
        let claim = format!("{label}: valency distribution equals the published row");
        let expected: ValencyDistribution = match published.parse() {
            Ok(d) => d,
            Err(e) => return error_detail(claim, &e),
        };
        let actual = match self.load(label) {
            Ok(e) => e.1.valency_distribution(),
            Err(e) => return error_detail(claim, &e),
        };
        let ok = actual == expected;
        let mut shown = actual.to_string();
        if !ok {
            let cells: Vec<String> =
                expected.diff(&actual).iter().map(|(v, e, a)| format!("{v}: {e} vs {a}")).collect();
            shown.push_str(&format!(" (differing cells, published vs computed: {})", cells.join(", ")));
        }
        detail(claim, expected, shown, ok)
    }

    fn table1(&mut self) -> Vec<Detail> {
        TYPE_A_ROWS.iter().map(|(label, row)| self.compare_row(label, row)).collect()
    }

    fn table2(&mut self) -> Vec<Detail> {
        let heavy = self.heavy;
        EXCEPTIONAL_ROWS
            .iter()
            .map(|&(label, needs_heavy, row)| {
                if needs_heavy && !heavy {
                    skipped(format!("{label}: valency distribution equals the published row"), "needs --heavy")
                } else {
                    self.compare_row(label, row)
                }
            })
            .collect()
    }

    fn diameter(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for label in finite_suite() {
            let entry = match self.load(&label) {
                Ok(e) => e,
                Err(e) => {
                    out.push(error_detail(&label, &e));
                    continue;
                }
            };
            let (group, graph) = (&entry.0, &entry.1);
            let w0 = graph.w0().expect("w0 is an involution");
            let comps = graph.components();
            let isolated = comps.iter().any(|c| c == &vec![w0]);
            out.push(detail(
                format!("{label}: w0 is isolated and the other involutions form one component"),
                "2 components, w0 isolated: true",
                format!("{} components, w0 isolated: {isolated}", comps.len()),
                isolated && comps.len() == 2,
            ));
            let expected = if is_rank_two_triangle_or_a1a1(group) { 1 } else { 3 };
            match graph.components_and_diameter() {
                Ok((_, d)) => out.push(detail(
                    format!("{label}: diameter of the component avoiding w0"),
                    expected,
                    d,
                    d == expected && d <= 3,
                )),
                Err(e) => out.push(error_detail(format!("{label}: diameter"), &e)),
            }
        }
        out
    }

    fn high_valency(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for label in finite_suite() {
            let entry = match self.load(&label) {
                Ok(e) => e,
                Err(e) => {
                    out.push(error_detail(&label, &e));
                    continue;
                }
            };
            let (group, graph) = (&entry.0, &entry.1);
            let bound = (graph.vertex_count() - 1) / 2;
            let gens: Vec<usize> = (1..=group.rank())
                .map(|l| {
                    graph.vertex(&group.generator(l).expect("label in range")).expect("generators are involutions")
                })
                .collect();
            let gen_degrees: Vec<usize> = gens.iter().map(|&v| graph.degree(v)).collect();
            out.push(detail(
                format!("{label}: every generator has valency (|I|-1)/2"),
                bound,
                format!("{gen_degrees:?}"),
                gen_degrees.iter().all(|&d| d == bound) && graph.vertex_count() % 2 == 1,
            ));
            let max_other = (0..graph.vertex_count()).filter(|v| !gens.contains(v)).map(|v| graph.degree(v)).max();
            out.push(detail(
                format!("{label}: every non-generator has valency below (|I|-1)/2"),
                format!("< {bound}"),
                format!("max {}", max_other.unwrap_or(0)),
                max_other.is_none_or(|m| m < bound),
            ));
            // descending by a generator shrinks the neighbourhood into the generator's
            let mut containment = true;
            let mut strict = true;
            let w0 = graph.w0();
            for v in 0..graph.vertex_count() {
                if Some(v) == w0 {
                    continue;
                }
                let x = graph.vertices().element(v);
                for s in group.right_descents(x) {
                    let g = gens[s - 1];
                    let (nx, ng) = (graph.row(v), graph.row(g));
                    containment &= nx.is_subset(ng);
                    if v != g && nx == ng {
                        strict = false;
                    }
                }
            }
            out.push(detail(
                format!("{label}: a right descent r of x gives Δ₁(x) ⊆ Δ₁(r), with equality only for x = r"),
                "true",
                format!("containment {containment}, strict {strict}"),
                containment && strict,
            ));
        }
        out
    }

    fn same_cardinality(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for label in finite_suite() {
            let entry = match self.load(&label) {
                Ok(e) => e,
                Err(e) => {
                    out.push(error_detail(&label, &e));
                    continue;
                }
            };
            let (group, graph) = (&entry.0, &entry.1);
            let inv = graph.vertices();
            for l in 1..=group.rank() {
                let r = group.generator(l).expect("label in range");
                let rv = graph.vertex(&r).expect("generator is a vertex");
                let inside = graph.degree(rv);
                let outside = graph.vertex_count() - 1 - inside;
                out.push(detail(
                    format!("{label}, r{l}: |Δ₁(r)| = |I ∖ ({{r}} ∪ Δ₁(r))|"),
                    inside,
                    outside,
                    inside == outside,
                ));
                let mut swaps = true;
                let mut bijective = true;
                let mut seen = BTreeSet::new();
                for v in 0..inv.len() {
                    if v == rv {
                        continue;
                    }
                    let x = inv.element(v);
                    let xr = group.mul(x, &r);
                    let partner = if xr == group.mul(&r, x) { xr } else { group.mul(&r, &xr) };
                    match inv.index_of(&partner) {
                        Some(p) if p != rv => {
                            swaps &= graph.is_adjacent_index(v, rv) != graph.is_adjacent_index(p, rv);
                            bijective &= seen.insert(p);
                        }
                        _ => bijective = false,
                    }
                }
                out.push(detail(
                    format!("{label}, r{l}: x ↦ xr (commuting) / x ↦ rxr (otherwise) swaps Δ₁(r) with its complement"),
                    "bijection swapping membership",
                    format!("bijection {bijective}, swaps {swaps}"),
                    swaps && bijective,
                ));
            }
        }
        out
    }

    fn valency_recursion(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for n in 2..=8 {
            for m in 1..=n / 2 {
                match (delta(m, n), delta_bruteforce(m, n)) {
                    (Ok(rec), Ok(brute)) => out.push(detail(
                        format!("δ({m},{n}) by recursion equals the valency in Sym({n})"),
                        brute,
                        rec,
                        rec == brute as u128,
                    )),
                    (Err(e), _) | (_, Err(e)) => out.push(error_detail(format!("δ({m},{n})"), &e)),
                }
                match wlog_check(m, n) {
                    Ok(ok) => out.push(detail(
                        format!("all minimal-length involutions with {m} transpositions in Sym({n}) share a valency"),
                        true,
                        ok,
                        ok,
                    )),
                    Err(e) => out.push(error_detail(format!("wlog ({m},{n})"), &e)),
                }
            }
        }
        for m in 1..=4 {
            for n in 2 * m..=16 {
                match (delta_closed_form(m, n), delta(m, n)) {
                    (Ok(c), Ok(r)) => {
                        out.push(detail(format!("closed form for δ({m},{n}) equals the recursion"), r, c, c == r))
                    }
                    (Err(e), _) | (_, Err(e)) => out.push(error_detail(format!("closed form δ({m},{n})"), &e)),
                }
            }
        }
        let a5: ValencyDistribution = TYPE_A_ROWS[2].1.parse().expect("published row parses");
        for (m, value, count) in [(1, 37u128, 5), (2, 19, 9), (3, 10, 1)] {
            let d = delta(m, 6).unwrap_or(0);
            out.push(detail(
                format!("δ({m},6) = {value}, a valency listed {count} times in the A5 row"),
                format!("{value}^{count}"),
                format!("{d}^{}", a5.count(d as usize)),
                d == value && a5.count(value as usize) == count,
            ));
        }
        out
    }

    fn pendant_groups(&mut self) -> Vec<std::result::Result<(String, Rc<(FiniteGroup, E0Graph)>), Detail>> {
        let heavy = self.heavy;
        pendant_suite()
            .into_iter()
            .map(|(label, needs_heavy)| {
                if needs_heavy && !heavy {
                    return Err(skipped(&label, "needs --heavy"));
                }
                self.load(&label).map(|e| (label.clone(), e)).map_err(|e| error_detail(&label, &e))
            })
            .collect()
    }

    fn pendants(&mut self) -> Vec<Detail> {
        self.pendant_groups()
            .into_iter()
            .map(|entry| {
                let (label, e) = entry?;
                let claim = format!("{label}: pendant elements equal the predicted set");
                Ok(match PendantReport::new(&e.0, &e.1) {
                    Ok(report) => {
                        detail(claim, words_list(&report.predicted), words_list(&report.computed), report.matches)
                    }
                    Err(err) => error_detail(claim, &err),
                })
            })
            .map(|r: std::result::Result<Detail, Detail>| r.unwrap_or_else(|d| d))
            .collect()
    }

    fn pendant_counts(&mut self) -> Vec<Detail> {
        self.pendant_groups()
            .into_iter()
            .map(|entry| {
                let (label, e) = entry?;
                let count = e.1.pendant_indices().len();
                let rank = e.0.rank();
                let predicted = predicted_pendants(&e.0).map(|p| p.len()).unwrap_or(0);
                Ok(detail(
                    format!("{label}: number of pendant elements equals the rank"),
                    rank,
                    format!("{count} (predicted set has {predicted})"),
                    count == rank && predicted == rank,
                ))
            })
            .map(|r: std::result::Result<Detail, Detail>| r.unwrap_or_else(|d| d))
            .collect()
    }

    fn dihedral(&mut self) -> Vec<Detail> {
        (3..=12u32)
            .map(|m| {
                let label = format!("I2({m})");
                let expected = ValencyDistribution::from_pairs(
                    std::iter::once((0, 1)).chain((1..=(m / 2) as usize).map(|i| (i, 2))),
                );
                match self.load(&label) {
                    Ok(e) => {
                        let actual = e.1.valency_distribution();
                        detail(
                            format!("{label}: distribution 0^1.1^2...⌊m/2⌋^2"),
                            &expected,
                            &actual,
                            actual == expected,
                        )
                    }
                    Err(err) => error_detail(label, &err),
                }
            })
            .collect()
    }

    fn length_steps(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for label in finite_suite() {
            let entry = match self.load(&label) {
                Ok(e) => e,
                Err(e) => {
                    out.push(error_detail(&label, &e));
                    continue;
                }
            };
            let (group, graph) = (&entry.0, &entry.1);
            let mut ok = true;
            let mut pairs = 0;
            for x in graph.vertices().elements() {
                let lx = group.length(x) as i64;
                for s in 0..group.rank() {
                    let r = group.generator(s + 1).expect("label in range");
                    let xr = group.mul(x, &r);
                    let rx = group.mul(&r, x);
                    if xr == rx {
                        continue;
                    }
                    pairs += 1;
                    let sign = if group.is_right_descent(x, s) { -1 } else { 1 };
                    let rxr = group.mul(&rx, &r);
                    ok &= group.length(&xr) as i64 == lx + sign
                        && group.length(&rx) as i64 == lx + sign
                        && group.length(&rxr) as i64 == lx + 2 * sign;
                }
            }
            out.push(detail(
                format!("{label}: for non-commuting involution x and generator r, ℓ(xr) = ℓ(rx) = ℓ(x) ± 1 and ℓ(rxr) = ℓ(x) ± 2 with the sign of x·α_r"),
                format!("{pairs} pairs consistent"),
                if ok { format!("{pairs} pairs consistent") } else { "inconsistent pair found".into() },
                ok,
            ));
        }
        out
    }

    fn dn_cosets(&mut self) -> Vec<Detail> {
        (4..=7)
            .map(|n| {
                let label = format!("D{n}");
                let claim = format!("{label}: every non-identity coset representative of W_(R∖r{n}) factors as a·b");
                let result = (|| -> Result<(usize, usize, [usize; 3])> {
                    let group = FiniteGroup::new(&GroupSpec::D(n))?;
                    let reps = dn_coset_representatives(&group)?;
                    let mut ok = 0;
                    let mut cases = [0usize; 3];
                    for x in &reps {
                        let Ok(f) = classify_dn_coset_rep(&group, x) else { continue };
                        let rebuilt = group.element_from_word(&f.a.concat(&f.b))?;
                        let reduced = group.length(x) == f.a.len() + f.b.len();
                        if &rebuilt == x && reduced {
                            ok += 1;
                            cases[f.case as usize] += 1;
                        }
                    }
                    Ok((reps.len(), ok, cases))
                })();
                match result {
                    Ok((total, ok, cases)) => detail(
                        claim,
                        format!("{total} classified"),
                        format!("{ok} classified ([n]: {}, [n,n-2,n-1]: {}, long: {})", cases[0], cases[1], cases[2]),
                        ok == total,
                    ),
                    Err(e) => error_detail(claim, &e),
                }
            })
            .collect()
    }

    fn universal(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        let dihedral = GeometricGroup::new(&GroupSpec::Universal(2));
        match ball_graph_diameter_evidence(&dihedral, 8, 2) {
            Ok(ev) => out.push(detail(
                "~A1: every non-adjacent pair of involutions of length ≤ 8 has a common neighbour of length ≤ 10",
                format!("{} pairs", ev.non_adjacent_pairs.pairs_checked),
                format!("{} pairs (verdict {:?})", ev.non_adjacent_pairs.pairs_with_common_neighbor, ev.verdict),
                ev.non_adjacent_pairs.all()
                    && ev.non_adjacent_pairs.pairs_checked > 0
                    && ev.verdict == DiameterVerdict::Two,
            )),
            Err(e) => out.push(error_detail("~A1 diameter evidence", &e)),
        }
        for (n, every) in [(2usize, false), (3, true)] {
            let group = GeometricGroup::new(&GroupSpec::Universal(n));
            match ball_graph_diameter_evidence(&group, 6, 0) {
                Ok(ev) => {
                    let a = &ev.adjacent_pairs;
                    let ok = a.pairs_checked > 0 && if every { a.all() } else { a.none() };
                    out.push(detail(
                        format!(
                            "U{n}: {} adjacent pair of involutions of length ≤ 6 has a common neighbour",
                            if every { "every" } else { "no" }
                        ),
                        format!("{} of {}", if every { a.pairs_checked } else { 0 }, a.pairs_checked),
                        format!("{} of {}", a.pairs_with_common_neighbor, a.pairs_checked),
                        ok,
                    ));
                }
                Err(e) => out.push(error_detail(format!("U{n} evidence"), &e)),
            }
            match BallGraph::build(&group, 6) {
                Ok(graph) => {
                    let mut agree = true;
                    for v in 0..graph.vertex_count() {
                        let x =
                            UniversalInvolution::new(graph.word(v).clone()).expect("involution words are palindromes");
                        let predicted = universal_neighborhood(&x, &graph).expect("universal group");
                        let direct: Vec<_> = graph.neighbors(v).iter().map(|&u| graph.word(u).clone()).collect();
                        agree &= predicted == direct;
                    }
                    out.push(detail(
                        format!("U{n}: neighbours of x are the involutions not ending in x's last letter"),
                        "agreement on every ball involution",
                        if agree { "agreement on every ball involution" } else { "disagreement" },
                        agree,
                    ));
                }
                Err(e) => out.push(error_detail(format!("U{n} ball"), &e)),
            }
        }
        out
    }

    fn products(&mut self) -> Vec<Detail> {
        let mut out = Vec::new();
        for (factors, radius) in [
            (vec![GroupSpec::Universal(2), GroupSpec::Universal(2)], 4),
            (vec![GroupSpec::Universal(3), GroupSpec::Universal(3)], 3),
        ] {
            let label = factors.iter().map(ToString::to_string).collect::<Vec<_>>().join("x");
            match product_diameter_check(&factors, radius, 2) {
                Ok(ev) => {
                    out.push(detail(
                        format!("{label}: adjacency is adjacency in every coordinate (ball radius {radius})"),
                        format!("{} pairs agree", ev.pairs_compared),
                        if ev.componentwise_agrees {
                            format!("{} pairs agree", ev.pairs_compared)
                        } else {
                            "disagreement".into()
                        },
                        ev.componentwise_agrees,
                    ));
                    let d = &ev.diameter;
                    out.push(detail(
                        format!("{label}: non-adjacent pairs have common neighbours within radius {}", d.search_radius),
                        format!("{} pairs", d.non_adjacent_pairs.pairs_checked),
                        format!("{} pairs (verdict {:?})", d.non_adjacent_pairs.pairs_with_common_neighbor, d.verdict),
                        d.verdict == DiameterVerdict::Two,
                    ));
                }
                Err(e) => out.push(error_detail(label, &e)),
            }
        }
        out
    }
}

/// `W(A_2)` (also written `I2(3)`) and `W(A_1 × A_1)` are the finite groups
/// whose graph without `w_0` has diameter 1.
fn is_rank_two_triangle_or_a1a1(group: &FiniteGroup) -> bool {
    group.rank() == 2 && matches!(group.matrix().get(0, 1), Some(2) | Some(3))
}

fn words_list(words: &[crate::word::Word]) -> String {
    words.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Convenience used by callers that only need a pass/fail.
pub fn run_check(name: &str, heavy: bool) -> Result<VerifyReport> {
    Verifier::new(heavy).run(name)
}
