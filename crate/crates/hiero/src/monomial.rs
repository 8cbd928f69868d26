//! Monomial ideals and polarization.
//!
//! A `MonomialIdeal` always stores its unique minimal generating set, sorted
//! structurally ascending, and never contains the unit. Polarization replaces
//! each variable power x^a by a product of a distinct copies, producing a
//! squarefree ideal in an enlarged ring; copies inherit the grid cell and the
//! grading weight of their base variable.

use crate::ring::{Grading, GridCell, Monomial, Ring, VarId, Variable};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MonomialIdealError {
    #[error("monomial ideal contains a unit")]
    ContainsUnit,
    #[error("no variable power to polarize")]
    NothingToPolarize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal from any generating set: drops duplicates and
    /// non-minimal generators, sorts. Rejects the unit ideal.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal, MonomialIdealError> {
        if gens.iter().any(|g| g.is_one()) {
            return Err(MonomialIdealError::ContainsUnit);
        }
        let gens = minimalize(gens);
        Ok(MonomialIdeal { ring, gens })
    }

    pub fn zero(ring: Ring) -> MonomialIdeal {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators, structurally sorted ascending.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Membership test: some generator divides m.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Intersection with another ideal in the same ring
    /// (pairwise lcms, re-minimalized).
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ring, other.ring);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) }
    }

    /// Colon ideal (self : m).
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.try_div(&g.gcd(m)).unwrap())
            .collect();
        MonomialIdeal { ring: self.ring.clone(), gens: minimalize(gens) }
    }

    /// Polarization: x^a becomes the product of copies 1..a of x. The result
    /// lives in a ring that keeps every original variable and appends the new
    /// copies; the returned map sends each variable of the new ring to its
    /// base variable in the old one.
    pub fn polarize(&self, grading: &Grading) -> Polarization {
        let n = self.ring.num_vars();
        let mut max_exp = vec![0u32; n];
        for g in &self.gens {
            for (id, &e) in g.exps().iter().enumerate() {
                max_exp[id] = max_exp[id].max(e);
            }
        }

        let mut descriptors: Vec<(String, u32, Option<GridCell>)> = Vec::new();
        let mut base_of: Vec<VarId> = Vec::new();
        let mut weights: Vec<Vec<i64>> = Vec::new();
        for v in self.ring.vars() {
            descriptors.push((v.base_name.clone(), v.copy_index, v.grid));
            base_of.push(v.id);
            weights.push(grading.weight_of_var(v.id).to_vec());
        }
        // copy k of variable x, for k = 2..max exponent; ids follow the originals
        let mut copy_ids: Vec<Vec<VarId>> = (0..n).map(|id| vec![id]).collect();
        for (id, &m) in max_exp.iter().enumerate() {
            let v = self.ring.var(id);
            for k in 2..=m {
                let new_id = descriptors.len();
                descriptors.push((v.base_name.clone(), copy_offset(v, k), v.grid));
                base_of.push(id);
                weights.push(grading.weight_of_var(id).to_vec());
                copy_ids[id].push(new_id);
            }
        }
        let ring = Ring::new(descriptors);
        let big_n = ring.num_vars();
        let grading = Grading::new(&ring, grading.dim(), weights)
            .expect("copies inherit positive weights");

        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut pairs = Vec::new();
                for (id, &e) in g.exps().iter().enumerate() {
                    for k in 0..e as usize {
                        pairs.push((copy_ids[id][k], 1));
                    }
                }
                Monomial::from_pairs(big_n, &pairs)
            })
            .collect();
        // polarization preserves minimality and cannot create a unit
        let ideal = MonomialIdeal { ring, gens: minimalize(gens) };
        Polarization { ideal, grading, base_of }
    }

    /// One step of partial polarization at the given variable: in every
    /// generator divisible by x^2 one factor of x is replaced by a fresh copy.
    pub fn partial_polarize(&self, var: VarId) -> Result<MonomialIdeal, MonomialIdealError> {
        if self.gens.iter().all(|g| g.exp(var) < 2) {
            return Err(MonomialIdealError::NothingToPolarize);
        }
        let v = self.ring.var(var);
        let next_copy = self
            .ring
            .vars()
            .iter()
            .filter(|u| u.base_name == v.base_name)
            .map(|u| u.copy_index)
            .max()
            .unwrap()
            + 1;
        let mut descriptors: Vec<(String, u32, Option<GridCell>)> = self
            .ring
            .vars()
            .iter()
            .map(|u| (u.base_name.clone(), u.copy_index, u.grid))
            .collect();
        let new_id = descriptors.len();
        descriptors.push((v.base_name.clone(), next_copy, v.grid));
        let ring = Ring::new(descriptors);
        let n = ring.num_vars();

        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps: Vec<u32> = g.exps().to_vec();
                exps.push(0);
                if exps[var] >= 2 {
                    exps[var] -= 1;
                    exps[n - 1] = 1;
                }
                let _ = new_id;
                Monomial::from_exps(exps)
            })
            .collect();
        Ok(MonomialIdeal { ring, gens: minimalize(gens) })
    }
}

/// Copy index for the k-th copy of a variable that is itself copy c of its
/// base: polarizing an already polarized ring never happens in practice
/// (copies are squarefree), so k is used directly.
fn copy_offset(v: &Variable, k: u32) -> u32 {
    debug_assert_eq!(v.copy_index, 1, "only squarefree-by-then variables gain copies");
    k
}

pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub grading: Grading,
    /// For every variable id of the polarized ring, the id of its base
    /// variable in the original ring.
    pub base_of: Vec<VarId>,
}

/// Minimal generating set: an antichain under divisibility, sorted by
/// ascending degree and, within a degree, by descending exponent vector
/// (so x-heavy monomials come first).
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut gens = gens;
    gens.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.exps().cmp(a.exps()))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        // earlier elements are structurally smaller, so divisors come first
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}
