//! One function per verb. Each fills in a report; input errors are
//! returned, everything else is a verdict.

use std::sync::Arc;

use crate::clone::{
    centralizer_clone, clone_of_algebra, commutation_witness, is_commutative_clone, render_algebra, validate_clone,
    CloneError, CloneTruncation, CloneVerdict, FiniteAlgebra, LawCheck, LawConfig,
};
use crate::model::{enumerate_models, verify_tensor_correspondence, EnumConfig, FiniteModel, ModelError};
use crate::operad::{
    bv_tensor_presentation, enumerate_operad_algebras, interchanging_pairs, operad_interchange_sides,
    render_operad_presentation, theory_of_operad, validate_operad, OperadError, OperadPresentation,
    SymOperadTruncation,
};
use crate::parallel::par_map;
use crate::structcat::{
    centrality_witness, freyd_cospan_witness, freyd_validate, funny_tensor, interchange_sides, is_2_category,
    premonoidal_centre, premonoidal_validate, sesqui_validate, FiniteCategory, PremonoidalData, Side,
};
use crate::syntax::render_list;
use crate::tensor::{
    commuting_tensor_presentation, graded_q_cospan_commutes, monoid_centralizer, monoid_tensor_universal_check,
    MonoidError, MonoidMap,
};
use crate::term::{
    commutation_equation, decide_equal, generic_application, random_case, render_presentation, soundness_probe,
    DecideConfig, DecideError, Equation, GenConfig, Presentation, Signature, Verdict,
};

use super::report::one_line;
use super::{CliError, Input, Loaded, Options, Report};

/// Longest listing of models or clone elements in one report.
const LISTING_LIMIT: usize = 100;

fn wrong_kind(l: &Loaded, verb: &str, expected: &str) -> CliError {
    CliError::invalid(&l.path, format!("`{verb}` expects {expected}, found a {} file", l.input.kind()))
}

fn ops_pair(opts: &Options) -> Result<(String, String), CliError> {
    match opts.ops.as_slice() {
        [f, g] => Ok((f.clone(), g.clone())),
        _ => Err(CliError::Usage("--ops expects exactly two names, as in `--ops f,g`".into())),
    }
}

/// Marks the report unknown when the pair needs more than the arity bound.
fn within_arity(r: &mut Report, n: usize, m: usize, bound: usize) -> bool {
    r.field("pair_arity", n * m);
    if n * m > bound {
        r.unknown(format!("arity {bound}: the pair needs arity {}", n * m));
        return false;
    }
    true
}

fn first_law_failure<'a>(laws: impl IntoIterator<Item = &'a LawCheck>) -> Option<(&'static str, &'a str)> {
    laws.into_iter().find_map(|l| l.failure.as_deref().map(|f| (l.law, f)))
}

fn law_fields(r: &mut Report, laws: &[LawCheck]) {
    r.field("laws_checked", laws.len());
    r.field("law_instances", laws.iter().map(|l| l.instances).sum::<u64>());
    r.field("laws_exhaustive", laws.iter().all(|l| l.exhaustive));
    if let Some((law, failure)) = first_law_failure(laws) {
        r.fail("witness_law", law).witness("witness", failure);
    }
}

fn enum_ceiling(r: &mut Report, e: ModelError, path: &str) -> Result<(), CliError> {
    match e {
        ModelError::EnumerationCeiling { carrier, cells, limit } => {
            r.unknown(format!("model enumeration ceiling: {carrier}^{cells} tables, {limit} nodes"));
            Ok(())
        }
        other => Err(CliError::invalid(path, other)),
    }
}

fn clone_ceiling(r: &mut Report, e: CloneError, path: &str) -> Result<(), CliError> {
    match e {
        CloneError::ClosureCeiling { arity, reached, ceiling } => {
            r.unknown(format!("clone closure ceiling {ceiling} at arity {arity} (reached {reached})"));
            Ok(())
        }
        other => Err(CliError::invalid(path, other)),
    }
}

/// An algebra with just the tables of `f` and `g`, which is what a
/// commutation witness needs to re-verify.
fn pair_algebra(name: &str, k: usize, f: (&str, usize, &[usize]), g: (&str, usize, &[usize])) -> FiniteAlgebra {
    let mut sig = Signature::new(name);
    let mut tables = Vec::new();
    for (sym, arity, table) in [f, g] {
        if sig.arity(sym).is_none() {
            sig.add_op(sym, arity).expect("fresh symbol");
            tables.push(table.to_vec());
        }
    }
    FiniteAlgebra::new(sig, k, tables).expect("tables taken from a valid algebra")
}

/// Both sides of the interchange equation of `f` and `g` evaluated at
/// `assignment`, through the term layer.
fn interchange_values(alg: &FiniteAlgebra, f: &str, g: &str, assignment: &[usize]) -> (usize, usize) {
    let (n, m) = (alg.signature.arity(f).expect("declared"), alg.signature.arity(g).expect("declared"));
    let eq = commutation_equation(&generic_application(f, n), n, &generic_application(g, m), m).expect("well formed");
    let pres = Arc::new(Presentation::new(alg.signature.clone(), vec![]).expect("no equations"));
    let model = FiniteModel::new(pres, alg.carrier(), alg.tables().to_vec()).expect("free model");
    (model.eval(&eq.lhs, assignment).expect("bound"), model.eval(&eq.rhs, assignment).expect("bound"))
}

fn algebra_pair_check(r: &mut Report, name: &str, k: usize, f: (&str, usize, &[usize]), g: (&str, usize, &[usize])) {
    match commutation_witness(k, f.2, f.1, g.2, g.1) {
        None => {
            r.field("assignments_checked", k.pow((f.1 * g.1) as u32));
        }
        Some(x) => {
            let alg = pair_algebra(name, k, f, g);
            let (lhs, rhs) = interchange_values(&alg, f.0, g.0, &x);
            r.fail("witness", one_line(&render_algebra(&alg)))
                .witness("witness_ops", format!("{},{}", f.0, g.0))
                .witness("witness_assignment", render_list(&x))
                .witness("witness_values", format!("{lhs} != {rhs}"));
        }
    }
}

fn decide_into(r: &mut Report, path: &str, p: &Presentation, eq: &Equation, opts: &Options) -> Result<(), CliError> {
    let config = DecideConfig::new(opts.depth, opts.model_bound);
    match decide_equal(p, eq, &config) {
        Ok(Verdict::Proved(cert)) => {
            r.field("proof_steps", cert.steps.len())
                .field("universe", cert.universe_size)
                .field("certificate_verified", cert.verify(p));
        }
        Ok(Verdict::Refuted { model, assignment }) => {
            let lhs = model.eval(&eq.lhs, &assignment).map_err(|e| CliError::invalid(path, e))?;
            let rhs = model.eval(&eq.rhs, &assignment).map_err(|e| CliError::invalid(path, e))?;
            r.fail("witness", one_line(&render_algebra(&model.to_algebra())))
                .witness("witness_assignment", render_list(&assignment))
                .witness("witness_values", format!("{lhs} != {rhs}"));
        }
        Ok(Verdict::Unknown { depth_bound, model_bound }) => {
            r.unknown(format!(
                "depth {depth_bound}, model-bound {model_bound}: no proof among terms of size <= {depth_bound} and no refuting model of size <= {model_bound}"
            ));
        }
        Err(DecideError::ResourceCeiling { what, limit }) => {
            r.unknown(format!("resource ceiling: {what} (limit {limit})"));
        }
        Err(e) => return Err(CliError::invalid(path, e)),
    }
    Ok(())
}

fn interchange_equation(p: &Presentation, f: &str, g: &str, path: &str) -> Result<(usize, usize, Equation), CliError> {
    let arity =
        |s: &str| p.signature.arity(s).ok_or_else(|| CliError::invalid(path, format!("unknown operation `{s}`")));
    let (n, m) = (arity(f)?, arity(g)?);
    let eq = commutation_equation(&generic_application(f, n), n, &generic_application(g, m), m)
        .map_err(|e| CliError::invalid(path, e))?;
    Ok((n, m, eq))
}

pub fn commute(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let (f, g) = ops_pair(opts)?;
    r.field("ops", format!("{f},{g}"));
    match &l.input {
        Input::Theory(p) => {
            let (n, m, eq) = interchange_equation(p, &f, &g, &l.path)?;
            r.field("theory", &p.signature.name).field("equation", &eq);
            if within_arity(r, n, m, opts.arity) {
                decide_into(r, &l.path, p, &eq, opts)?;
            }
        }
        Input::Algebra(alg) => {
            let (n, ft) = alg.operation(&f).map_err(|e| CliError::invalid(&l.path, e))?;
            let (m, gt) = alg.operation(&g).map_err(|e| CliError::invalid(&l.path, e))?;
            r.field("algebra", &alg.signature.name).field("carrier", alg.carrier());
            if within_arity(r, n, m, opts.arity) {
                algebra_pair_check(r, &alg.signature.name, alg.carrier(), (&f, n, ft), (&g, m, gt));
            }
        }
        Input::Operad(o) => operad_pair(r, &l.path, o, &f, &g, opts)?,
        _ => return Err(wrong_kind(l, "commute", "a theory, algebra or operad file")),
    }
    Ok(())
}

fn operad_pair(
    r: &mut Report,
    path: &str,
    o: &SymOperadTruncation,
    f: &str,
    g: &str,
    opts: &Options,
) -> Result<(), CliError> {
    let find = |s: &str| o.find(s).ok_or_else(|| CliError::invalid(path, format!("unknown operad element `{s}`")));
    let (psi, phi) = (find(f)?, find(g)?);
    r.field("operad", &o.name);
    if !within_arity(r, psi.arity, phi.arity, opts.arity.min(o.bound())) {
        return Ok(());
    }
    let (lhs, rhs) = operad_interchange_sides(o, psi, phi).map_err(|e| CliError::invalid(path, e))?;
    r.field("lhs", o.name_of(lhs)).field("rhs", o.name_of(rhs));
    if lhs != rhs {
        r.fail("witness", format!("{f},{g}"))
            .witness("witness_sides", format!("{} != {}", o.name_of(lhs), o.name_of(rhs)));
    }
    Ok(())
}

pub fn check_theory(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    match &l.input {
        Input::Theory(p) => check_presentation(r, &l.path, p, opts),
        Input::Algebra(alg) => {
            r.field("algebra", &alg.signature.name).field("carrier", alg.carrier());
            match clone_of_algebra(alg, opts.arity) {
                Ok(c) => check_clone(r, &c, |e| c.describe(e), Some(alg.carrier())),
                Err(e) => clone_ceiling(r, e, &l.path)?,
            }
            Ok(())
        }
        Input::Operad(o) => {
            r.field("operad", &o.name);
            let (c, _) = theory_of_operad(o, opts.arity);
            check_clone(r, &c, |e| c.describe(e), None);
            Ok(())
        }
        _ => Err(wrong_kind(l, "check-theory", "a theory, algebra or operad file")),
    }
}

fn check_presentation(r: &mut Report, path: &str, p: &Presentation, opts: &Options) -> Result<(), CliError> {
    let ops: Vec<(String, usize)> = p.signature.ops().map(|(s, a)| (s.to_string(), a)).collect();
    r.field("theory", &p.signature.name).field("ops", ops.len()).field("equations", p.equations.len());
    let mut first_unknown: Option<(String, String)> = None;
    let (mut proved, mut refuted, mut unknown) = (0, 0, 0);
    for (i, (f, _)) in ops.iter().enumerate() {
        for (g, _) in &ops[i..] {
            let (n, m, eq) = interchange_equation(p, f, g, path)?;
            let mut sub = Report::new("", vec![], r.bounds, r.seed);
            if within_arity(&mut sub, n, m, opts.arity) {
                decide_into(&mut sub, path, p, &eq, opts)?;
            }
            let status = sub.outcome.as_str();
            r.field(
                format!("pair_{f}_{g}"),
                match status {
                    "pass" => "proved",
                    "fail" => "refuted",
                    _ => "unknown",
                },
            );
            match sub.outcome {
                super::Outcome::Pass => proved += 1,
                super::Outcome::Fail => {
                    refuted += 1;
                    if r.witness.is_empty() {
                        r.witness("witness_ops", format!("{f},{g}"));
                        r.witness.extend(sub.witness);
                    }
                }
                super::Outcome::Unknown => {
                    unknown += 1;
                    if first_unknown.is_none() {
                        first_unknown = Some((format!("{f},{g}"), sub.bound.unwrap_or_default()));
                    }
                }
            }
        }
    }
    r.field("pairs_proved", proved).field("pairs_refuted", refuted).field("pairs_unknown", unknown);
    if refuted > 0 {
        r.outcome = super::Outcome::Fail;
    } else if let Some((pair, bound)) = first_unknown {
        r.unknown(format!("{bound} (pair {pair})"));
    }
    Ok(())
}

fn check_clone(
    r: &mut Report,
    c: &CloneTruncation,
    describe: impl Fn(crate::clone::Elem) -> String,
    carrier: Option<usize>,
) {
    for n in 0..=c.bound() {
        r.field(format!("size_{n}"), c.size(n));
    }
    match is_commutative_clone(c) {
        Ok(CloneVerdict::CommutativeUpTo(n)) => {
            r.field("commutative_up_to", n);
        }
        Ok(CloneVerdict::NotCommutative(f, g)) => match carrier {
            Some(k) => {
                let (ft, gt) = (parse_table(&describe(f)), parse_table(&describe(g)));
                let alg = pair_algebra("witness", k, ("f", f.arity, &ft), ("g", g.arity, &gt));
                let x = commutation_witness(k, &ft, f.arity, &gt, g.arity).expect("non-commuting pair");
                let (lhs, rhs) = interchange_values(&alg, "f", "g", &x);
                r.fail("witness", one_line(&render_algebra(&alg)))
                    .witness("witness_ops", "f,g")
                    .witness("witness_assignment", render_list(&x))
                    .witness("witness_values", format!("{lhs} != {rhs}"));
            }
            None => {
                r.fail("witness", format!("{}, {}", describe(f), describe(g)));
            }
        },
        Err(e) => {
            r.unknown(format!("clone truncation: {e}"));
        }
    }
}

fn parse_table(s: &str) -> Vec<usize> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().expect("function clones describe elements by their tables"))
        .collect()
}

pub fn tensor(a: &Loaded, b: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    match (&a.input, &b.input) {
        (Input::Theory(s), Input::Theory(t)) => {
            let (s, t) = (Arc::new(s.clone()), Arc::new(t.clone()));
            let combined = commuting_tensor_presentation(&s, &t);
            let u = &combined.presentation;
            let renaming = |pairs: &[(String, String)]| {
                pairs.iter().map(|(o, n)| format!("{o}->{n}")).collect::<Vec<_>>().join(", ")
            };
            r.field("ops", u.signature.len())
                .field("equations", u.equations.len())
                .field("interchange_equations", u.equations.len() - s.equations.len() - t.equations.len())
                .field("left_renaming", renaming(&combined.left))
                .field("right_renaming", renaming(&combined.right))
                .field("presentation", one_line(&render_presentation(u)));
        }
        (Input::Monoid(m1), Input::Monoid(m2)) => {
            r.field("left_order", m1.order())
                .field("right_order", m2.order())
                .field("product_order", m1.order() * m2.order());
            match monoid_tensor_universal_check(m1, m2, opts.size) {
                Ok(u) => {
                    r.field("probes", u.probes)
                        .field("cospans", u.cospans_tested)
                        .field("homs_checked", u.factorizations);
                    if let Some(f) = u.failures.first() {
                        r.fail("witness", f);
                    }
                }
                Err(MonoidError::Ceiling(n)) => {
                    r.unknown(format!("probe catalogue ends at order {n}"));
                }
                Err(e) => return Err(CliError::invalid(&a.path, e)),
            }
        }
        _ => return Err(wrong_kind(a, "tensor", "two theory files or two monoid files")),
    }
    Ok(())
}

fn presentation_of(l: &Loaded, verb: &str) -> Result<Arc<Presentation>, CliError> {
    match &l.input {
        Input::Theory(p) => Ok(Arc::new(p.clone())),
        Input::OperadPresentation(p) => Ok(Arc::new(p.to_presentation())),
        _ => Err(wrong_kind(l, verb, "a theory or operad presentation file")),
    }
}

pub fn models(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let p = presentation_of(l, "models")?;
    r.field("theory", &p.signature.name);
    for k in 0..=opts.size {
        match enumerate_models(&p, k, &EnumConfig::default()) {
            Ok(ms) => {
                r.field(format!("models_{k}"), ms.len());
                if k == opts.size {
                    r.field("listed", ms.len().min(LISTING_LIMIT));
                    for (i, m) in ms.iter().take(LISTING_LIMIT).enumerate() {
                        r.field(format!("model_{}", i + 1), one_line(&render_algebra(&m.to_algebra())));
                    }
                }
            }
            Err(e) => return enum_ceiling(r, e, &l.path),
        }
    }
    Ok(())
}

pub fn verify_tensor(a: &Loaded, b: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let (s, t) = match (&a.input, &b.input) {
        (Input::Theory(s), Input::Theory(t)) => (Arc::new(s.clone()), Arc::new(t.clone())),
        _ => return Err(wrong_kind(a, "verify-tensor", "two theory files")),
    };
    for k in 0..=opts.size {
        let report = match verify_tensor_correspondence(&s, &t, k, &EnumConfig::default()) {
            Ok(c) => c,
            Err(e) => return enum_ceiling(r, e, &a.path),
        };
        r.field(
            format!("carrier_{k}"),
            format!(
                "tensor_models={} commuting_pairs={} left_models={} right_models={}",
                report.tensor_models, report.commuting_pairs, report.left_models, report.right_models
            ),
        );
        if !report.holds() && r.witness.is_empty() {
            let defect = report.defects.first().cloned().unwrap_or_else(|| {
                format!("{} tensor models against {} commuting pairs", report.tensor_models, report.commuting_pairs)
            });
            r.fail("witness_carrier", k).witness("witness", defect);
        }
    }
    Ok(())
}

fn clone_listing(r: &mut Report, c: &CloneTruncation) {
    let total: usize = (0..=c.bound()).map(|n| c.size(n)).sum();
    r.field("elements", total);
    if total <= LISTING_LIMIT * 10 {
        for n in 0..=c.bound() {
            for e in c.elements(n) {
                r.field(format!("element_{n}_{}", e.id), c.describe(e));
            }
        }
    }
}

pub fn clone(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let c = match &l.input {
        Input::Algebra(alg) => match clone_of_algebra(alg, opts.arity) {
            Ok(c) => c,
            Err(e) => return clone_ceiling(r, e, &l.path),
        },
        Input::Operad(o) => theory_of_operad(o, opts.arity).0,
        _ => return Err(wrong_kind(l, "clone", "an algebra or operad file")),
    };
    for n in 0..=c.bound() {
        r.field(format!("size_{n}"), c.size(n));
    }
    clone_listing(r, &c);
    law_fields(r, &validate_clone(&c, &LawConfig::default()).laws);
    Ok(())
}

pub fn centralizer(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    match &l.input {
        Input::Algebra(alg) => {
            let c = match centralizer_clone(alg, opts.arity) {
                Ok(c) => c,
                Err(e) => return clone_ceiling(r, e, &l.path),
            };
            for n in 0..=c.bound() {
                r.field(format!("size_{n}"), c.size(n));
            }
            clone_listing(r, &c);
            law_fields(r, &validate_clone(&c, &LawConfig::default()).laws);
        }
        Input::Monoid(m) => {
            let centre = monoid_centralizer(&MonoidMap::identity(m));
            r.field("order", m.order())
                .field("centre", render_list(&centre.elements))
                .field("centre_order", centre.elements.len())
                .field("commutative", m.is_commutative());
        }
        _ => return Err(wrong_kind(l, "centralizer", "an algebra or monoid file")),
    }
    Ok(())
}

fn algebra_counts(r: &mut Report, path: &str, p: &OperadPresentation, opts: &Options) -> Result<bool, CliError> {
    for k in 0..=opts.size {
        match enumerate_operad_algebras(p, k, &EnumConfig::default()) {
            Ok(a) => {
                r.field(format!("algebras_{k}"), a.len());
            }
            Err(e) => {
                enum_ceiling(r, e, path)?;
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn operad(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    match &l.input {
        Input::Operad(o) => {
            r.field("operad", &o.name).field("bound", o.bound());
            for n in 0..=o.bound() {
                r.field(format!("size_{n}"), o.size(n));
            }
            let report = validate_operad(o, &LawConfig::default());
            law_fields(r, &report.laws);
            if r.outcome != super::Outcome::Pass {
                return Ok(());
            }
            if !opts.ops.is_empty() {
                let (f, g) = ops_pair(opts)?;
                return operad_pair(r, &l.path, o, &f, &g, opts);
            }
            let (mut pairs, mut commuting, mut first) = (0, 0, None);
            for n in 0..=o.bound() {
                for m in 0..=o.bound() {
                    if n * m > o.bound() {
                        continue;
                    }
                    for psi in o.elements(n) {
                        for phi in o.elements(m) {
                            let (lhs, rhs) = operad_interchange_sides(o, psi, phi)
                                .map_err(|e: OperadError| CliError::invalid(&l.path, e))?;
                            pairs += 1;
                            if lhs == rhs {
                                commuting += 1;
                            } else if first.is_none() {
                                first = Some(format!("{},{}", o.name_of(psi), o.name_of(phi)));
                            }
                        }
                    }
                }
            }
            r.field("pairs", pairs).field("commuting_pairs", commuting);
            if let Some(p) = first {
                r.field("first_noncommuting", p);
            }
        }
        Input::OperadPresentation(p) => {
            r.field("operad", &p.name).field("generators", p.generators.len()).field("relations", p.relations.len());
            for (i, rel) in p.relations.iter().enumerate() {
                r.field(format!("relation_{}", i + 1), rel);
            }
            algebra_counts(r, &l.path, p, opts)?;
        }
        _ => return Err(wrong_kind(l, "operad", "an operad or operad presentation file")),
    }
    Ok(())
}

pub fn bv(a: &Loaded, b: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let (p1, p2) = match (&a.input, &b.input) {
        (Input::OperadPresentation(p1), Input::OperadPresentation(p2)) => (p1, p2),
        _ => return Err(wrong_kind(a, "bv", "two operad presentation files")),
    };
    let t = bv_tensor_presentation(p1, p2);
    r.field("generators", t.generators.len())
        .field("relations", t.relations.len())
        .field("presentation", one_line(&render_operad_presentation(&t)));
    for k in 0..=opts.size {
        let algebras = enumerate_operad_algebras(&t, k, &EnumConfig::default());
        let pairs = interchanging_pairs(p1, p2, k, &EnumConfig::default());
        let (algebras, pairs) = match (algebras, pairs) {
            (Ok(x), Ok(y)) => (x.len(), y.len()),
            (Err(e), _) | (_, Err(e)) => return enum_ceiling(r, e, &a.path),
        };
        r.field(format!("carrier_{k}"), format!("algebras={algebras} interchanging_pairs={pairs}"));
        if algebras != pairs && r.witness.is_empty() {
            r.fail("witness_carrier", k)
                .witness("witness", format!("{algebras} algebras against {pairs} interchanging pairs"));
        }
    }
    Ok(())
}

fn category_of(l: &Loaded) -> Result<&FiniteCategory, CliError> {
    match &l.input {
        Input::Category(c) => Ok(c),
        _ => Err(wrong_kind(l, "cat", "category files")),
    }
}

pub fn cat(inputs: &[Loaded], opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let a = category_of(&inputs[0])?;
    r.field("objects", a.object_count()).field("arrows", a.arrow_count()).field("posetal", a.is_posetal());
    let Some(second) = inputs.get(1) else {
        return Ok(());
    };
    let b = category_of(second)?;
    r.field("second_objects", b.object_count()).field("second_arrows", b.arrow_count());
    let t = funny_tensor(a, b);
    let confluence = t.local_confluence(opts.word_len.min(4));
    r.field("confluence_words", confluence.words_checked).field("critical_pairs", confluence.critical_pairs);
    let (mut equal, mut larger, mut truncated) = (0, 0, 0);
    let mut example = None;
    let objects: Vec<(usize, usize)> =
        (0..a.object_count()).flat_map(|x| (0..b.object_count()).map(move |y| (x, y))).collect();
    for &src in &objects {
        for &tgt in &objects {
            let cmp = t.compare_with_product(src, tgt, opts.word_len);
            truncated += usize::from(cmp.truncated);
            if cmp.funny == cmp.product && !cmp.truncated {
                equal += 1;
            } else {
                larger += 1;
                if example.is_none() {
                    let more = if cmp.truncated { "+" } else { "" };
                    example = Some(format!(
                        "{} -> {}: funny {}{more}, product {}",
                        t.object_name(src),
                        t.object_name(tgt),
                        cmp.funny,
                        cmp.product
                    ));
                }
            }
        }
    }
    r.field("homs_equal_to_product", equal)
        .field("homs_larger_than_product", larger)
        .field("homs_truncated", truncated);
    r.field("finite", t.is_finite());
    if let Some(e) = example {
        r.field("first_difference", e);
    }
    if let Some((w, x, y)) = confluence.failure {
        r.fail("witness", t.render_word(&w))
            .witness("witness_normal_forms", format!("{} != {}", t.render_word(&x), t.render_word(&y)));
    }
    Ok(())
}

pub fn sesqui(l: &Loaded, r: &mut Report) -> Result<(), CliError> {
    let Input::Sesqui(s) = &l.input else {
        return Err(wrong_kind(l, "sesqui", "a sesqui file"));
    };
    r.field("objects", s.base().object_count()).field("arrows", s.base().arrow_count()).field("cells", s.cells().len());
    law_fields(r, &sesqui_validate(s).laws);
    if r.outcome != super::Outcome::Pass {
        return Ok(());
    }
    let two = is_2_category(s).map_err(|e| CliError::invalid(&l.path, e))?;
    r.field("interchange_failures", two.interchange_failures.len());
    if let Some(&(alpha, beta)) = two.interchange_failures.first() {
        let (lhs, rhs) = interchange_sides(s, alpha, beta).map_err(|e| CliError::invalid(&l.path, e))?;
        r.fail("witness", format!("{},{}", s.cell_name(alpha), s.cell_name(beta)))
            .witness("witness_sides", format!("{} != {}", s.cell_name(lhs), s.cell_name(rhs)));
    } else if let Some((law, failure)) = first_law_failure(&two.horizontal.laws) {
        r.fail("witness_law", law).witness("witness", failure);
    }
    Ok(())
}

fn premonoidal_of<'a>(l: &'a Loaded, verb: &str) -> Result<&'a PremonoidalData, CliError> {
    match &l.input {
        Input::Premonoidal(p) => Ok(p),
        _ => Err(wrong_kind(l, verb, "a premonoidal file")),
    }
}

fn arrow_list(p: &PremonoidalData, arrows: &[usize]) -> String {
    let names: Vec<&str> = arrows.iter().map(|&f| p.base().arrow_name(f)).collect();
    format!("[{}]", names.join(","))
}

pub fn premonoidal(l: &Loaded, r: &mut Report) -> Result<(), CliError> {
    let p = premonoidal_of(l, "premonoidal")?;
    r.field("objects", p.base().object_count()).field("arrows", p.base().arrow_count());
    let report = premonoidal_validate(p);
    law_fields(r, &report.report.laws);
    r.field("posetal", report.posetal)
        .field("non_central", arrow_list(p, &report.non_central))
        .field("monoidal", report.passed() && report.non_central.is_empty());
    if let Some(&f) = report.non_central.first() {
        if let Some((g, side)) = centrality_witness(p, f) {
            let side = match side {
                Side::Left => "left",
                Side::Right => "right",
            };
            r.field(
                "first_non_central",
                format!("{} against {} ({side} square)", p.base().arrow_name(f), p.base().arrow_name(g)),
            );
        }
    }
    Ok(())
}

pub fn freyd(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let p = premonoidal_of(l, "freyd")?;
    let all: Vec<usize> = (0..p.base().arrow_count()).collect();
    if !opts.ops.is_empty() {
        let (x, y) = ops_pair(opts)?;
        let find =
            |s: &str| p.base().find_arrow(s).ok_or_else(|| CliError::invalid(&l.path, format!("unknown arrow `{s}`")));
        let (x, y) = (find(&x)?, find(&y)?);
        r.field("arrows", arrow_list(p, &[x, y]));
        if freyd_cospan_witness(p, &[x], &[y]).is_some() {
            r.fail("witness", arrow_list(p, &[x, y]).trim_matches(|c| c == '[' || c == ']'));
        }
        return Ok(());
    }
    let centre = match premonoidal_centre(p) {
        Ok(c) => c,
        Err(e) => {
            r.fail("witness_law", "premonoidal laws").witness("witness", e);
            return Ok(());
        }
    };
    r.field("centre", arrow_list(p, &centre.arrows)).field("centre_monoidal", centre.monoidal);
    let report = freyd_validate(&centre.data, p, &centre.inclusion).map_err(|e| CliError::invalid(&l.path, e))?;
    law_fields(r, &report.laws);
    match freyd_cospan_witness(p, &all, &all) {
        None => r.field("cospan_all_arrows", "commutes"),
        Some((x, y)) => r.field("cospan_all_arrows", format!("fails at {}", arrow_list(p, &[x, y]))),
    };
    Ok(())
}

pub fn graded(l: &Loaded, opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let Input::Graded(alg) = &l.input else {
        return Err(wrong_kind(l, "graded", "a graded file"));
    };
    let (Some(a), Some(b)) = (&opts.left, &opts.right) else {
        return Err(CliError::Usage("graded needs --left ELEM and --right ELEM".into()));
    };
    let f = alg.element(a).map_err(|e| CliError::invalid(&l.path, e))?;
    let g = alg.element(b).map_err(|e| CliError::invalid(&l.path, e))?;
    let (left, right) = graded_q_cospan_commutes(alg, &f, &g).map_err(|e| CliError::invalid(&l.path, e))?;
    r.field("p", alg.modulus())
        .field("q", alg.q())
        .field("product_left_right", alg.render_element(&alg.mul(&f, &g)))
        .field("product_right_left", alg.render_element(&alg.mul(&g, &f)))
        .field("left", left)
        .field("right", right);
    if !(left && right) {
        let failed = match (left, right) {
            (false, false) => "left,right",
            (false, true) => "left",
            _ => "right",
        };
        r.fail("witness", format!("{a},{b}")).witness("witness_failed", failed);
    }
    Ok(())
}

/// The two bound settings each generated case is decided under.
/// Term universe ceiling for generated cases.
pub const GEN_MAX_UNIVERSE: usize = 100_000;
/// Model search nodes per carrier size for generated cases.
pub const GEN_MAX_NODES: u64 = 2_000_000;

pub fn gen_settings(opts: &Options) -> [DecideConfig; 2] {
    [
        DecideConfig::new(opts.depth, opts.model_bound),
        DecideConfig::new((opts.depth / 2).max(1), (opts.model_bound / 2).max(1)),
    ]
    .map(|c| DecideConfig {
        max_universe: GEN_MAX_UNIVERSE,
        model_search: EnumConfig { max_nodes: GEN_MAX_NODES },
        ..c
    })
}

pub fn gen(opts: &Options, r: &mut Report) -> Result<(), CliError> {
    let config = GenConfig::default();
    let settings = gen_settings(opts);
    let indices: Vec<u64> = (0..opts.count as u64).collect();
    if let Some(dir) = &opts.corpus {
        let shown = dir.display().to_string();
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: shown.clone(), source })?;
        for &i in &indices {
            let case = random_case(opts.seed, i, &config);
            let text = format!("# goal: {}\n{}", case.goal, render_presentation(&case.presentation));
            let path = dir.join(format!("case_{i:04}.thy"));
            std::fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        }
    }
    let probes = par_map(&indices, |&i| {
        let case = random_case(opts.seed, i, &config);
        let probe = soundness_probe(&case, &settings);
        (case, probe)
    });
    let (mut proved, mut refuted, mut unknown, mut ceilings, mut errors, mut unsound) = (0, 0, 0, 0, 0, 0);
    for (i, (case, probe)) in probes.iter().enumerate() {
        match probe {
            Ok(p) => {
                ceilings += p.ceilings;
                if p.verdicts.iter().any(Verdict::is_proved) {
                    proved += 1;
                } else if p.verdicts.iter().any(Verdict::is_refuted) {
                    refuted += 1;
                } else {
                    unknown += 1;
                }
                if !p.sound() {
                    unsound += 1;
                    if r.witness.is_empty() {
                        let why = if p.contradictory {
                            "proved and refuted".to_string()
                        } else {
                            p.bad_certificates.join("; ")
                        };
                        r.fail("witness_case", i)
                            .witness("witness", one_line(&render_presentation(&case.presentation)))
                            .witness("witness_goal", &case.goal)
                            .witness("witness_defect", why);
                    }
                }
            }
            Err(_) => errors += 1,
        }
    }
    let setting = |c: &DecideConfig| format!("depth={} model_bound={}", c.depth_bound, c.model_bound);
    r.field("cases", opts.count)
        .field("settings", settings.iter().map(setting).collect::<Vec<_>>().join("; "))
        .field("proved", proved)
        .field("refuted", refuted)
        .field("undecided", unknown)
        .field("resource_ceilings", ceilings)
        .field("errors", errors)
        .field("unsound", unsound);
    if errors > 0 && unsound == 0 {
        r.unknown(format!("{errors} cases could not be decided"));
    }
    Ok(())
}
