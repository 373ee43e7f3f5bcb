//! The four subcommands. Each builds a [`Document`]; grid cells run on a
//! rayon pool and come back in input order.

use std::collections::BTreeMap;

use coxkrew::coxeter::{build_group, css_rows, CoxError};
use coxkrew::kreweras::{
    catalan, in_image_phi, is_very_good, kreweras, kreweras_bc_closed, level, phi,
    refinement_report, sum_rationals, CoxeterType, IrrLabel, KrewError, ParabolicType,
};
use coxkrew::partitions::{pair_stats, Bipartition};
use coxkrew::qlaurent::{IntLaurentPoly, QRational, RootValue};
use coxkrew::springer_bc::{
    collapse_c, critical_values, enumerate_omega, iota, kreweras_via_orbit,
    level_stratum_sum_check, orbit_count_exotic, phi_c,
};
use coxkrew::symbolic::{h3_rows, I2Row, TableRow};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::Document;
use crate::{Common, Failure};

const NOT_VERY_GOOD: &str = "expected: t not very good";

fn krew_err(e: KrewError) -> Failure {
    Failure::Config(e.to_string())
}

fn cox_err(e: CoxError) -> Failure {
    match e {
        CoxError::SizeLimit { .. } => Failure::SizeLimit(e.to_string()),
        other => Failure::Config(other.to_string()),
    }
}

fn par_map<T: Sync, R: Send>(
    cfg: &Common,
    items: &[T],
    f: impl Fn(&T) -> R + Sync + Send,
) -> Result<Vec<R>, Failure> {
    Ok(cfg.pool()?.install(|| items.par_iter().map(f).collect()))
}

/// Polynomial string when the quotient is exact, else `(num)/(den)`.
fn render_rational(r: &QRational) -> String {
    match r.normalize() {
        Ok(p) => p.to_string(),
        Err(_) => {
            let r = r.clone().simplified();
            format!("({})/({})", r.numerator(), r.denominator())
        }
    }
}

fn has_negative(p: &IntLaurentPoly) -> bool {
    p.has_negative_coefficient() || p.has_negative_exponent()
}

fn type_name(ty: CoxeterType) -> String {
    ty.to_string()
}

/// Parabolic class mapped to each label in the image of `phi`.
fn parabolic_of(ty: CoxeterType) -> Result<BTreeMap<String, ParabolicType>, Failure> {
    let mut map = BTreeMap::new();
    for p in ty.parabolic_classes() {
        map.insert(phi(ty, &p).map_err(krew_err)?.to_string(), p);
    }
    Ok(map)
}

fn symbolic_rows(ty: CoxeterType) -> Result<Vec<TableRow>, Failure> {
    match ty {
        CoxeterType::H3 => Ok(h3_rows()),
        CoxeterType::I2(m) => Ok(I2Row::rows_for(m)
            .into_iter()
            .map(|r| r.table_row(m % 2 == 0))
            .collect()),
        _ => Err(Failure::Config("--symbolic needs --type h3 or i2".into())),
    }
}

pub fn tables(cfg: &Common) -> Result<Document, Failure> {
    let types = cfg
        .types()?
        .ok_or_else(|| Failure::Config("tables needs --type".into()))?;
    if cfg.symbolic {
        let mut doc = Document::new("tables", vec!["type", "label", "kreweras", "qv", "parabolic"]);
        doc.meta.insert("symbolic".into(), true.into());
        let mut latex = Vec::new();
        for ty in types {
            for row in symbolic_rows(ty)? {
                latex.push(row.latex());
                doc.push(vec![
                    type_name(ty).into(),
                    row.label_plain.into(),
                    row.krew.to_string().into(),
                    row.qv.to_string().into(),
                    row.parabolic_plain.into(),
                ]);
            }
        }
        doc.latex_rows = Some(latex);
        return Ok(doc);
    }

    let ts = cfg
        .t_values()?
        .ok_or_else(|| Failure::Config("tables needs --t or --t-range".into()))?;
    let cells: Vec<(CoxeterType, u32)> = types
        .iter()
        .flat_map(|&ty| ts.iter().map(move |&t| (ty, t)))
        .collect();
    let computed = par_map(cfg, &cells, |&(ty, t)| table_cell(ty, t))?;

    let mut doc = Document::new(
        "tables",
        vec!["type", "t", "label", "kreweras", "level", "parabolic", "positive"],
    );
    doc.meta.insert("t".into(), json!(ts));
    for rows in computed {
        for row in rows? {
            doc.push(row);
        }
    }
    Ok(doc)
}

fn table_cell(ty: CoxeterType, t: u32) -> Result<Vec<Vec<Value>>, Failure> {
    let parabolic = parabolic_of(ty)?;
    ty.irreducibles()
        .iter()
        .map(|chi| {
            let k = kreweras(ty, chi, t).map_err(krew_err)?;
            let positive = k.normalize().is_ok_and(|p| !has_negative(&p));
            let par = parabolic
                .get(&chi.to_string())
                .map_or_else(|| "—".to_string(), |p| p.to_string());
            Ok(vec![
                type_name(ty).into(),
                t.into(),
                chi.to_string().into(),
                render_rational(&k).into(),
                level(ty, chi).map_err(krew_err)?.into(),
                par.into(),
                positive.into(),
            ])
        })
        .collect()
}

/// The integrality grid: all very good `t` per type.
fn default_verify_grid() -> Vec<(CoxeterType, Vec<u32>)> {
    let mut g = Vec::new();
    for n in 2..=8 {
        let ty = CoxeterType::A(n);
        g.push((ty, (1..=25).filter(|&t| is_very_good(ty, t)).collect()));
    }
    for n in 1..=6 {
        g.push((CoxeterType::BC(n), (1..=21).step_by(2).collect()));
    }
    g.push((CoxeterType::H3, vec![1, 5, 9, 11, 15, 19, 21]));
    for m in 3..=12u32 {
        let ty = CoxeterType::I2(m);
        g.push((ty, (1..=3 * m + 1).filter(|&t| is_very_good(ty, t)).collect()));
    }
    g
}

fn default_ts(ty: CoxeterType) -> Vec<u32> {
    default_verify_grid()
        .into_iter()
        .find(|(g, _)| *g == ty)
        .map(|(_, ts)| ts)
        .unwrap_or_else(|| {
            (1..=3 * ty.coxeter_number())
                .filter(|&t| is_very_good(ty, t))
                .collect()
        })
}

struct SuiteResult {
    suite: &'static str,
    checked: usize,
    /// first counterexample
    failure: Option<String>,
    note: String,
}

impl SuiteResult {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checked: 0,
            failure: None,
            note: String::new(),
        }
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        if self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn verify_cell(ty: CoxeterType, t: u32) -> Result<Vec<SuiteResult>, Failure> {
    let labels = ty.irreducibles();
    let values: Vec<QRational> = labels
        .iter()
        .map(|chi| kreweras(ty, chi, t))
        .collect::<Result<_, _>>()
        .map_err(krew_err)?;

    let mut integrality = SuiteResult::new("integrality");
    let mut positivity = SuiteResult::new("positivity");
    let mut vanishing = 0;
    for (chi, k) in labels.iter().zip(&values) {
        integrality.checked += 1;
        let image = in_image_phi(ty, chi).map_err(krew_err)?;
        match k.normalize() {
            Err(e) => {
                integrality.fail(|| format!("{chi}: {e}"));
                positivity.fail(|| format!("{chi}: not a polynomial"));
            }
            Ok(p) => {
                if p.has_negative_exponent() {
                    integrality.fail(|| format!("{chi}: negative exponent in {p}"));
                }
                positivity.checked += 1;
                if p.is_zero() && !image && t < ty.coxeter_number() {
                    vanishing += 1;
                } else if has_negative(&p) == image {
                    positivity.fail(|| format!("{chi}: in image {image}, value {p}"));
                }
            }
        }
    }
    if vanishing > 0 {
        positivity.note = format!("{vanishing} labels outside the image vanish");
    }

    let report = refinement_report(ty, t).map_err(krew_err)?;
    let mut refinement = SuiteResult::new("refinement");
    refinement.checked = ty.rank() as usize + 1;
    if let Some(k) = report.failed_levels.first() {
        refinement.fail(|| format!("level {k}"));
    }
    let mut catalan_sum = SuiteResult::new("catalan_sum");
    catalan_sum.checked = labels.len();
    let cat = catalan(ty, t);
    if !sum_rationals(&values).equals(&cat) || !report.catalan_sum_ok {
        catalan_sum.fail(|| "sum of Kreweras numbers differs from Catalan".into());
    }
    catalan_sum.note = match cat.normalize() {
        Ok(p) => format!("Cat at q=1: {}", p.eval_at_one()),
        Err(_) => "Cat is not a polynomial".into(),
    };

    let mut suites = vec![integrality, positivity, refinement, catalan_sum];
    if let CoxeterType::BC(_) = ty {
        let mut cross = SuiteResult::new("bc_cross");
        if t % 2 == 1 {
            for chi in &labels {
                let IrrLabel::BCPair(b) = chi else { unreachable!() };
                cross.checked += 1;
                let closed = kreweras_bc_closed(b, t).map_err(krew_err)?;
                if !closed.equals(&kreweras_via_orbit(b, t)) {
                    cross.fail(|| b.to_string());
                }
            }
        } else {
            cross.note = "closed form needs odd t".into();
        }
        suites.push(cross);
    }
    Ok(suites)
}

pub fn verify(cfg: &Common) -> Result<Document, Failure> {
    let ts = cfg.t_values()?;
    let grid: Vec<(CoxeterType, Vec<u32>)> = match cfg.types()? {
        Some(types) => types
            .into_iter()
            .map(|ty| (ty, ts.clone().unwrap_or_else(|| default_ts(ty))))
            .collect(),
        None => default_verify_grid()
            .into_iter()
            .map(|(ty, g)| (ty, ts.clone().unwrap_or(g)))
            .collect(),
    };
    let cells: Vec<(CoxeterType, u32)> = grid
        .iter()
        .flat_map(|(ty, ts)| ts.iter().map(move |&t| (*ty, t)))
        .collect();
    let computed = par_map(cfg, &cells, |&(ty, t)| verify_cell(ty, t))?;

    let mut doc = Document::new(
        "verify",
        vec!["type", "t", "suite", "very_good", "checked", "status", "counterexample", "note"],
    );
    let mut totals: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    for (&(ty, t), suites) in cells.iter().zip(computed) {
        let good = is_very_good(ty, t);
        for s in suites? {
            let status = match (&s.failure, good) {
                (None, _) => "pass",
                (Some(_), true) => {
                    doc.failed = true;
                    "fail"
                }
                (Some(_), false) => "expected-fail",
            };
            let entry = totals.entry(s.suite).or_default();
            entry.0 += 1;
            if status == "fail" {
                entry.1 += 1;
            }
            let note = match (status, s.note.is_empty()) {
                ("expected-fail", true) => NOT_VERY_GOOD.to_string(),
                ("expected-fail", false) => format!("{NOT_VERY_GOOD}; {}", s.note),
                _ => s.note,
            };
            doc.push(vec![
                type_name(ty).into(),
                t.into(),
                s.suite.into(),
                good.into(),
                s.checked.into(),
                status.into(),
                s.failure.map_or(Value::Null, Value::from),
                note.into(),
            ]);
        }
    }
    let summary: serde_json::Map<String, Value> = totals
        .into_iter()
        .map(|(k, (cells, fails))| (k.to_string(), json!({"cells": cells, "failures": fails})))
        .collect();
    doc.meta.insert("suites".into(), summary.into());
    doc.meta.insert("passed".into(), (!doc.failed).into());
    Ok(doc)
}

fn default_css_grid() -> Vec<(CoxeterType, Vec<u32>)> {
    let mut v = Vec::new();
    for n in 2..=5 {
        v.push((CoxeterType::A(n), (1..=3).collect()));
    }
    for n in 1..=4 {
        v.push((CoxeterType::BC(n), (1..=2).collect()));
    }
    v.push((CoxeterType::H3, (1..=3).collect()));
    for m in 3..=10 {
        v.push((CoxeterType::I2(m), (1..=4).collect()));
    }
    v
}

fn default_s(ty: CoxeterType) -> Vec<u32> {
    default_css_grid()
        .into_iter()
        .find(|(g, _)| *g == ty)
        .map_or_else(|| vec![1], |(_, s)| s)
}

fn render_root_value(v: &RootValue) -> Value {
    match v {
        RootValue::Integer(n) => n.to_string().into(),
        RootValue::NonConstant(r) => format!("non-integer ({r})").into(),
    }
}

pub fn css(cfg: &Common) -> Result<Document, Failure> {
    if cfg.t.is_some() || cfg.t_range.is_some() {
        return Err(Failure::Config("css takes --s; t is s*h + 1".into()));
    }
    let budget = cfg.budget()?;
    let ss = cfg.s_values()?;
    let grid: Vec<(CoxeterType, Vec<u32>)> = match cfg.types()? {
        Some(types) => types
            .into_iter()
            .map(|ty| (ty, ss.clone().unwrap_or_else(|| default_s(ty))))
            .collect(),
        None => default_css_grid()
            .into_iter()
            .map(|(ty, g)| (ty, ss.clone().unwrap_or(g)))
            .collect(),
    };
    let types: Vec<CoxeterType> = grid.iter().map(|(ty, _)| *ty).collect();
    let groups = par_map(cfg, &types, |&ty| build_group(ty))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(cox_err)?;
    let cells: Vec<(usize, u32)> = grid
        .iter()
        .enumerate()
        .flat_map(|(i, (_, ss))| ss.iter().map(move |&s| (i, s)))
        .collect();
    let computed = par_map(cfg, &cells, |&(i, s)| css_rows(&groups[i], s, budget))?;

    let mut doc = Document::new(
        "css",
        vec!["type", "s", "d", "class", "label", "fixed", "predicted", "equal"],
    );
    doc.meta.insert("budget".into(), budget.into());
    let mut compared = 0u64;
    for (&(i, s), rows) in cells.iter().zip(computed) {
        for r in rows.map_err(cox_err)? {
            let equal = r.holds();
            doc.failed |= !equal;
            compared += 1;
            doc.push(vec![
                type_name(types[i]).into(),
                s.into(),
                r.d.into(),
                r.class.to_string().into(),
                r.label.to_string().into(),
                r.fixed.into(),
                render_root_value(&r.predicted),
                equal.into(),
            ]);
        }
    }
    doc.meta.insert("comparisons".into(), compared.into());
    doc.meta.insert("passed".into(), (!doc.failed).into());
    Ok(doc)
}

pub fn orbits(cfg: &Common) -> Result<Document, Failure> {
    if matches!(cfg.family, Some(f) if f != crate::Family::Bc) {
        return Err(Failure::Config("orbits is defined for type bc only".into()));
    }
    let ns: Vec<u32> = cfg
        .rank
        .clone()
        .ok_or_else(|| Failure::Config("orbits needs --rank".into()))?
        .0
        .collect();
    if ns.contains(&0) {
        return Err(Failure::Config("rank must be positive".into()));
    }
    if let Some(&n) = ns.iter().find(|&&n| n > 10) {
        return Err(Failure::Config(format!("rank {n} exceeds the enumeration bound 10")));
    }
    let computed = par_map(cfg, &ns, |&n| orbit_rows(n))?;

    let mut doc = Document::new(
        "orbits",
        vec!["n", "omega", "iota", "critical", "orbit_count", "phi_c", "collapse", "level"],
    );
    let mut sums_ok = serde_json::Map::new();
    for (&n, rows) in ns.iter().zip(computed) {
        for row in rows? {
            doc.push(row);
        }
        let ok = (0..=n).all(|k| level_stratum_sum_check(n, k));
        doc.failed |= !ok;
        sums_ok.insert(n.to_string(), Value::from(ok));
    }
    doc.meta.insert("level_sums_match".into(), sums_ok.into());
    Ok(doc)
}

fn orbit_rows(n: u32) -> Result<Vec<Vec<Value>>, Failure> {
    enumerate_omega(n)
        .iter()
        .map(|w| {
            let b: Bipartition = iota(w).map_err(|e| Failure::Config(e.to_string()))?;
            let crit: Vec<String> = critical_values(w).iter().map(u32::to_string).collect();
            Ok(vec![
                n.into(),
                w.to_string().into(),
                b.to_string().into(),
                format!("{{{}}}", crit.join(",")).into(),
                orbit_count_exotic(&b).to_string().into(),
                phi_c(&b).to_string().into(),
                collapse_c(&b).to_string().into(),
                pair_stats(&b).l.into(),
            ])
        })
        .collect()
}
