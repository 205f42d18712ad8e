//! Finite semantics: models of presentations on carriers `{0..k}`,
//! homomorphisms between them, and commuting pairs of models.

mod enumerate;
mod tensor_check;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::clone::FiniteAlgebra;
use crate::term::{Presentation, Term};

pub use enumerate::{enumerate_models, for_each_model, EnumConfig};
pub use tensor_check::{verify_tensor_correspondence, HomSpotCheck, TensorCorrespondence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("variable x{0} is not bound by the assignment")]
    UnboundVariable(usize),
    #[error("unknown operation `{0}`")]
    UnknownSymbol(String),
    #[error("table for `{symbol}` has {found} entries, expected {expected}")]
    TableSize { symbol: String, expected: usize, found: usize },
    #[error("table for `{symbol}` has value {value} outside carrier of size {carrier}")]
    ValueOutOfRange { symbol: String, value: usize, carrier: usize },
    #[error("equation {equation} fails at assignment {assignment:?}")]
    EquationViolated { equation: usize, assignment: Vec<usize> },
    #[error("carrier mismatch: {0} vs {1}")]
    CarrierMismatch(usize, usize),
    #[error("models are over different presentations")]
    PresentationMismatch,
    #[error("enumeration ceiling exceeded: search space {carrier}^{cells} exceeded {limit} nodes")]
    EnumerationCeiling { carrier: usize, cells: usize, limit: u64 },
}

/// Interpretation of a presentation on `{0..carrier}`; every equation holds.
#[derive(Clone)]
pub struct FiniteModel {
    presentation: Arc<Presentation>,
    carrier: usize,
    /// One row-major table of size `carrier^arity` per operation, in
    /// signature order.
    tables: Vec<Vec<usize>>,
}

impl fmt::Debug for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModel")
            .field("theory", &self.presentation.name())
            .field("carrier", &self.carrier)
            .field("tables", &self.tables)
            .finish()
    }
}

impl PartialEq for FiniteModel {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.tables == other.tables
            && (Arc::ptr_eq(&self.presentation, &other.presentation) || self.presentation == other.presentation)
    }
}

impl Eq for FiniteModel {}

pub(crate) fn table_len(carrier: usize, arity: usize) -> usize {
    carrier.pow(arity as u32)
}

/// Row-major index of `args` in a table over a carrier of size `k`.
pub(crate) fn row_major(args: &[usize], k: usize) -> usize {
    args.iter().fold(0, |acc, &a| acc * k + a)
}

impl FiniteModel {
    /// Checks table shapes and every equation under every assignment.
    pub fn new(presentation: Arc<Presentation>, carrier: usize, tables: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let sig = &presentation.signature;
        if tables.len() != sig.len() {
            return Err(ModelError::TableSize {
                symbol: "<signature>".into(),
                expected: sig.len(),
                found: tables.len(),
            });
        }
        for ((symbol, arity), table) in sig.ops().zip(&tables) {
            let expected = table_len(carrier, arity);
            if table.len() != expected {
                return Err(ModelError::TableSize { symbol: symbol.into(), expected, found: table.len() });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= carrier) {
                return Err(ModelError::ValueOutOfRange { symbol: symbol.into(), value, carrier });
            }
        }
        let model = FiniteModel { presentation, carrier, tables };
        if let Some((equation, assignment)) = model.first_violation() {
            return Err(ModelError::EquationViolated { equation, assignment });
        }
        Ok(model)
    }

    pub(crate) fn from_parts_unchecked(
        presentation: Arc<Presentation>,
        carrier: usize,
        tables: Vec<Vec<usize>>,
    ) -> Self {
        FiniteModel { presentation, carrier, tables }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }

    pub fn table(&self, symbol: &str) -> Option<&[usize]> {
        let i = self.presentation.signature.index_of(symbol)?;
        Some(&self.tables[i])
    }

    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        self.tables[op][row_major(args, self.carrier)]
    }

    /// Structural evaluation of `t` under `assignment` (`x_i ↦ assignment[i-1]`).
    pub fn eval(&self, t: &Term, assignment: &[usize]) -> Result<usize, ModelError> {
        match t {
            Term::Var(i) => assignment.get(i.wrapping_sub(1)).copied().ok_or(ModelError::UnboundVariable(*i)),
            Term::App(s, args) => {
                let op = self.presentation.signature.index_of(s).ok_or_else(|| ModelError::UnknownSymbol(s.clone()))?;
                let mut idx = 0;
                for a in args {
                    idx = idx * self.carrier + self.eval(a, assignment)?;
                }
                Ok(self.tables[op][idx])
            }
        }
    }

    /// First (equation, assignment) at which the model fails, if any.
    pub fn first_violation(&self) -> Option<(usize, Vec<usize>)> {
        for (k, eq) in self.presentation.equations.iter().enumerate() {
            if self.carrier == 0 && eq.var_count > 0 {
                continue;
            }
            let mut assignment = vec![0; eq.var_count];
            loop {
                let l = self.eval(&eq.lhs, &assignment).ok()?;
                let r = self.eval(&eq.rhs, &assignment).ok()?;
                if l != r {
                    return Some((k, assignment));
                }
                if !crate::term::next_tuple(&mut assignment, self.carrier) {
                    break;
                }
            }
        }
        None
    }

    pub fn to_algebra(&self) -> FiniteAlgebra {
        FiniteAlgebra::new(self.presentation.signature.clone(), self.carrier, self.tables.clone())
            .expect("model tables are well-formed")
    }

    /// Restriction along a symbol renaming: tables of `target`'s operations
    /// are read from this model's `rename(symbol)` operations.
    pub fn restrict(
        &self,
        target: &Arc<Presentation>,
        rename: &impl Fn(&str) -> String,
    ) -> Result<FiniteModel, ModelError> {
        let mut tables = Vec::new();
        for (s, _) in target.signature.ops() {
            let name = rename(s);
            let t = self.table(&name).ok_or(ModelError::UnknownSymbol(name))?;
            tables.push(t.to_vec());
        }
        FiniteModel::new(target.clone(), self.carrier, tables)
    }
}

/// A map between carriers that commutes with every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelHom {
    pub map: Vec<usize>,
}

impl ModelHom {
    /// Checks `h ∘ op_a = op_b ∘ h^n` for every operation.
    pub fn is_hom(a: &FiniteModel, b: &FiniteModel, map: &[usize]) -> bool {
        let sig = &a.presentation.signature;
        for (op, (_, arity)) in sig.ops().enumerate() {
            if a.carrier == 0 && arity > 0 {
                continue;
            }
            let mut args = vec![0; arity];
            loop {
                let image: Vec<usize> = args.iter().map(|&x| map[x]).collect();
                if map[a.apply(op, &args)] != b.apply(op, &image) {
                    return false;
                }
                if !crate::term::next_tuple(&mut args, a.carrier) {
                    break;
                }
            }
        }
        true
    }
}

/// All homomorphisms `a → b`, in lexicographic order of their tables.
pub fn enumerate_homs(a: &FiniteModel, b: &FiniteModel) -> Result<Vec<ModelHom>, ModelError> {
    if a.presentation.signature != b.presentation.signature {
        return Err(ModelError::PresentationMismatch);
    }
    let mut out = Vec::new();
    let (ka, kb) = (a.carrier, b.carrier);
    if ka > 0 && kb == 0 {
        return Ok(out);
    }
    let mut map = vec![0; ka];
    loop {
        if ModelHom::is_hom(a, b, &map) {
            out.push(ModelHom { map: map.clone() });
        }
        if !crate::term::next_tuple(&mut map, kb) {
            break;
        }
    }
    Ok(out)
}

/// Whether the two structures on one carrier commute: every operation of
/// `t_model` is a homomorphism of `s_model`-structures `X^m → X`.
pub fn is_commuting_pair(s_model: &FiniteModel, t_model: &FiniteModel) -> Result<bool, ModelError> {
    if s_model.carrier != t_model.carrier {
        return Err(ModelError::CarrierMismatch(s_model.carrier, t_model.carrier));
    }
    Ok(first_noncommuting(s_model, t_model).is_none())
}

/// First pair of operations (S-op, T-op) that fail to interchange, with
/// the offending `n × m` matrix of elements (row-major).
pub fn first_noncommuting(s_model: &FiniteModel, t_model: &FiniteModel) -> Option<(String, String, Vec<usize>)> {
    let k = s_model.carrier;
    let s_sig = &s_model.presentation.signature;
    let t_sig = &t_model.presentation.signature;
    for (phi, (phi_name, n)) in s_sig.ops().enumerate() {
        for (psi, (psi_name, m)) in t_sig.ops().enumerate() {
            if k == 0 && n * m > 0 {
                continue;
            }
            // psi: X^m → X is a hom from the S-structure on X^m: for an
            // n-tuple of m-vectors (rows of the matrix), psi applied to the
            // componentwise phi equals phi applied to the psi's of the rows
            let mut matrix = vec![0; n * m];
            loop {
                let columns: Vec<usize> = (0..m)
                    .map(|j| {
                        let col: Vec<usize> = (0..n).map(|i| matrix[i * m + j]).collect();
                        s_model.apply(phi, &col)
                    })
                    .collect();
                let rows: Vec<usize> = (0..n).map(|i| t_model.apply(psi, &matrix[i * m..(i + 1) * m])).collect();
                if t_model.apply(psi, &columns) != s_model.apply(phi, &rows) {
                    return Some((phi_name.to_string(), psi_name.to_string(), matrix));
                }
                if !crate::term::next_tuple(&mut matrix, k) {
                    break;
                }
            }
        }
    }
    None
}
