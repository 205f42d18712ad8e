//! Desk-scale check that models of the commuting tensor of two
//! presentations are exactly the commuting pairs of models.

use std::collections::HashMap;
use std::sync::Arc;

use crate::tensor::{commuting_tensor_presentation, CombinedPresentation};
use crate::term::{terms_up_to, Presentation};

use super::{enumerate_homs, enumerate_models, first_noncommuting, EnumConfig, FiniteModel, ModelError, ModelHom};

/// Hom-set sizes compared on both sides for every pair of tensor models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpotCheck {
    pub pairs_checked: usize,
    pub mismatches: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct TensorCorrespondence {
    pub carrier: usize,
    pub tensor: Arc<Presentation>,
    pub tensor_models: usize,
    pub left_models: usize,
    pub right_models: usize,
    pub commuting_pairs: usize,
    /// `(tensor model, left model, right model)` indices.
    pub bijection: Vec<(usize, usize, usize)>,
    pub hom_check: Option<HomSpotCheck>,
    /// Pairs of derived operations (terms up to the configured size in two
    /// variables) whose interchange was checked on every tensor model.
    pub derived_pairs_checked: usize,
    pub defects: Vec<String>,
}

impl TensorCorrespondence {
    pub fn holds(&self) -> bool {
        self.defects.is_empty() && self.tensor_models == self.commuting_pairs
    }
}

/// Term size used for the derived-operation interchange check.
const SPOT_CHECK_TERM_SIZE: usize = 4;

fn renamer(pairs: &[(String, String)]) -> impl Fn(&str) -> String + '_ {
    move |s: &str| pairs.iter().find(|(orig, _)| orig == s).map(|(_, new)| new.clone()).unwrap_or_else(|| s.to_string())
}

fn index_by_tables(models: &[FiniteModel]) -> HashMap<Vec<Vec<usize>>, usize> {
    models.iter().enumerate().map(|(i, m)| (m.tables().to_vec(), i)).collect()
}

/// Functions `k^2 → k` of derived operations, deduplicated.
fn derived_binary(model: &FiniteModel) -> Vec<Vec<usize>> {
    let k = model.carrier();
    let mut seen = Vec::new();
    for t in terms_up_to(&model.presentation().signature, 2, SPOT_CHECK_TERM_SIZE) {
        let table: Vec<usize> =
            (0..k * k).map(|i| model.eval(&t, &[i / k, i % k]).expect("two variables bound")).collect();
        if !seen.contains(&table) {
            seen.push(table);
        }
    }
    seen
}

fn binary_interchange(f: &[usize], g: &[usize], k: usize) -> bool {
    let ap = |t: &[usize], a: usize, b: usize| t[a * k + b];
    (0..k.pow(4)).all(|i| {
        let (a, b, c, d) = (i / (k * k * k), (i / (k * k)) % k, (i / k) % k, i % k);
        // rows (a,b), (c,d)
        ap(f, ap(g, a, b), ap(g, c, d)) == ap(g, ap(f, a, c), ap(f, b, d))
    })
}

pub fn verify_tensor_correspondence(
    s: &Arc<Presentation>,
    t: &Arc<Presentation>,
    k: usize,
    config: &EnumConfig,
) -> Result<TensorCorrespondence, ModelError> {
    let CombinedPresentation { presentation, left, right } = commuting_tensor_presentation(s, t);
    let tensor = Arc::new(presentation);
    let u_models = enumerate_models(&tensor, k, config)?;
    let s_models = enumerate_models(s, k, config)?;
    let t_models = enumerate_models(t, k, config)?;
    let (s_index, t_index) = (index_by_tables(&s_models), index_by_tables(&t_models));
    let mut defects = Vec::new();

    let mut commuting = Vec::new();
    for (i, sm) in s_models.iter().enumerate() {
        for (j, tm) in t_models.iter().enumerate() {
            if first_noncommuting(sm, tm).is_none() {
                commuting.push((i, j));
            }
        }
    }

    let mut bijection = Vec::new();
    let mut hit = HashMap::new();
    let mut restrictions = Vec::new();
    for (u, model) in u_models.iter().enumerate() {
        let sm = model.restrict(s, &renamer(&left))?;
        let tm = model.restrict(t, &renamer(&right))?;
        let (Some(&i), Some(&j)) = (s_index.get(sm.tables()), t_index.get(tm.tables())) else {
            defects.push(format!("tensor model {u} restricts outside the enumerated models"));
            continue;
        };
        if let Some((phi, psi, _)) = first_noncommuting(&sm, &tm) {
            defects.push(format!("tensor model {u} restricts to a non-commuting pair ({phi}, {psi})"));
        }
        if let Some(prev) = hit.insert((i, j), u) {
            defects.push(format!("tensor models {prev} and {u} restrict to the same pair"));
        }
        bijection.push((u, i, j));
        restrictions.push((sm, tm));
    }
    for &(i, j) in &commuting {
        if !hit.contains_key(&(i, j)) {
            defects.push(format!("commuting pair ({i}, {j}) is not the restriction of a tensor model"));
        }
    }

    let mut derived_pairs_checked = 0;
    for (u, (sm, tm)) in restrictions.iter().enumerate() {
        if k == 0 {
            break;
        }
        let fs = derived_binary(sm);
        let gs = derived_binary(tm);
        for f in &fs {
            for g in &gs {
                derived_pairs_checked += 1;
                if !binary_interchange(f, g, k) {
                    defects.push(format!("tensor model {u}: derived operations {f:?} and {g:?} do not interchange"));
                }
            }
        }
    }

    let hom_check = (k <= 2).then(|| {
        let mut check = HomSpotCheck { pairs_checked: 0, mismatches: Vec::new() };
        for (a, ma) in u_models.iter().enumerate() {
            for (b, mb) in u_models.iter().enumerate() {
                check.pairs_checked += 1;
                let tensor_homs = enumerate_homs(ma, mb).expect("same presentation").len();
                let (sa, ta) = &restrictions[a];
                let (sb, tb) = &restrictions[b];
                let pair_homs =
                    all_maps(k).filter(|m| ModelHom::is_hom(sa, sb, m) && ModelHom::is_hom(ta, tb, m)).count();
                if tensor_homs != pair_homs {
                    check.mismatches.push((a, b));
                }
            }
        }
        check
    });
    if let Some(check) = &hom_check {
        for (a, b) in &check.mismatches {
            defects.push(format!("hom counts differ between tensor models {a} and {b}"));
        }
    }

    Ok(TensorCorrespondence {
        carrier: k,
        tensor,
        tensor_models: u_models.len(),
        left_models: s_models.len(),
        right_models: t_models.len(),
        commuting_pairs: commuting.len(),
        bijection,
        hom_check,
        derived_pairs_checked,
        defects,
    })
}

fn all_maps(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut map = vec![0; k];
        for slot in map.iter_mut().rev() {
            *slot = code % k.max(1);
            code /= k.max(1);
        }
        map
    })
}
