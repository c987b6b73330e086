//! Finite fields, abelian groups, hyperoperation tables and the H1–H5 audit.

mod axioms;
mod field;
mod group;
mod hvs;
mod subset;
mod table;

pub use axioms::{check_axioms, Axiom, AxiomMode, AxiomReport, AxiomWitness, SetRelation};
pub use field::{validate_finite_field, FiniteField};
pub use group::{validate_abelian_group, AbelianGroup};
pub use hvs::HyperVectorSpace;
pub use subset::{Subset, SubsetIter, MAX_ELEMENTS};
pub use table::{LawFailure, Table, ValidationReport};

/// Size caps applied to user-supplied structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_carrier: usize,
    pub max_field: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_carrier: 16, max_field: 5 }
    }
}

impl Limits {
    pub fn check(&self, v: &HyperVectorSpace) -> crate::Result<()> {
        if v.dim() > self.max_carrier {
            return Err(crate::Error::CarrierTooLarge { size: v.dim(), limit: self.max_carrier });
        }
        if v.scalars() > self.max_field {
            return Err(crate::Error::CarrierTooLarge { size: v.scalars(), limit: self.max_field });
        }
        Ok(())
    }
}

/// `{p + q : p ∈ s, q ∈ t}` in `g`.
pub fn set_sum(s: Subset, t: Subset, g: &AbelianGroup) -> Subset {
    g.set_sum(s, t)
}

/// `{-s : s ∈ set}` in `g`.
pub fn set_negate(set: Subset, g: &AbelianGroup) -> Subset {
    g.set_negate(set)
}
