//! Cartesian products of presentations.
//!
//! A face `A × B` of `P × Q` is the Minkowski sum of `A × {0}` and `{0} × B`,
//! so the product ring is generated by the two factor alphabets side by side
//! and its kernel contains both factor kernels.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::laurent::{LaurentPoly, Monomial};
use crate::presentations::{box_ring, Generator, Polarity, Presentation};

/// Two presentations and the presentation of their product.
#[derive(Clone, Debug)]
pub struct ProductPresentation {
    left: Presentation,
    right: Presentation,
    combined: Presentation,
    left_names: BTreeMap<String, String>,
    right_names: BTreeMap<String, String>,
}

/// `name` tagged with a block index, separated by `_` after a trailing digit.
fn tagged(name: &str, block: usize) -> String {
    if name.ends_with(|c: char| c.is_ascii_digit()) {
        format!("{name}_{block}")
    } else {
        format!("{name}{block}")
    }
}

fn embed(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    match (a, b) {
        (Polytope::Box(x), Polytope::Box(y)) => {
            Ok(Polytope::Box(x.iter().chain(y).copied().collect()))
        }
        _ => Polytope::product(vec![a.clone(), b.clone()]),
    }
}

pub fn product_presentation(
    left: &Presentation,
    right: &Presentation,
) -> Result<ProductPresentation> {
    let left_set: BTreeSet<String> = left.names().into_iter().collect();
    let right_set: BTreeSet<String> = right.names().into_iter().collect();
    let rename = |names: &BTreeSet<String>,
                  other: &BTreeSet<String>,
                  block: usize|
     -> BTreeMap<String, String> {
        names
            .iter()
            .map(|n| {
                let new = if other.contains(n) {
                    tagged(n, block)
                } else {
                    n.clone()
                };
                (n.clone(), new)
            })
            .collect()
    };
    let left_names = rename(&left_set, &right_set, 1);
    let right_names = rename(&right_set, &left_set, 2);

    let (lu, ru) = (left.unit(), right.unit());
    let mut generators = Vec::new();
    for g in left.generators() {
        generators.push(Generator::new(
            left_names[&g.name].clone(),
            embed(&g.polytope, ru)?,
            g.polarity,
        ));
    }
    for g in right.generators() {
        generators.push(Generator::new(
            right_names[&g.name].clone(),
            embed(lu, &g.polytope)?,
            g.polarity,
        ));
    }
    let declared = left
        .declared()
        .iter()
        .map(|d| d.rename(&left_names))
        .chain(right.declared().iter().map(|d| d.rename(&right_names)))
        .collect();
    let combined = Presentation::new(
        format!("product:{},{}", left.id(), right.id()),
        generators,
        embed(lu, ru)?,
        declared,
    )?;
    Ok(ProductPresentation {
        left: left.clone(),
        right: right.clone(),
        combined,
        left_names,
        right_names,
    })
}

fn invert(map: &BTreeMap<String, String>) -> BTreeMap<String, String> {
    map.iter().map(|(k, v)| (v.clone(), k.clone())).collect()
}

/// `(f` with `right` set to 1, `f` with `left` set to 1`)`.
pub fn psi_split(
    f: &LaurentPoly,
    left: &[String],
    right: &[String],
) -> Result<(LaurentPoly, LaurentPoly)> {
    let ones = |names: &[String]| -> BTreeMap<String, BigRational> {
        names
            .iter()
            .map(|n| (n.clone(), BigRational::from_integer(1.into())))
            .collect()
    };
    Ok((f.substitute(&ones(right))?, f.substitute(&ones(left))?))
}

impl ProductPresentation {
    pub fn left(&self) -> &Presentation {
        &self.left
    }

    pub fn right(&self) -> &Presentation {
        &self.right
    }

    pub fn combined(&self) -> &Presentation {
        &self.combined
    }

    /// Factor name to combined name, left block first.
    pub fn name_table(&self) -> Vec<(usize, String, String)> {
        let block = |i: usize, m: &BTreeMap<String, String>, p: &Presentation| {
            p.names()
                .into_iter()
                .map(move |n| (i, m[&n].clone(), n))
                .collect::<Vec<_>>()
        };
        let mut out = block(1, &self.left_names, &self.left);
        out.extend(block(2, &self.right_names, &self.right));
        out.into_iter()
            .map(|(i, combined, factor)| (i, factor, combined))
            .collect()
    }

    /// `x^α ⊗ y^β ↦ x^α y^β` in the combined alphabet.
    pub fn tau(&self, left: &LaurentPoly, right: &LaurentPoly) -> LaurentPoly {
        left.rename(&self.left_names) * right.rename(&self.right_names)
    }

    /// Splits `f` into factor polynomials written in the factor alphabets.
    pub fn psi(&self, f: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        let left: Vec<String> = self.left_names.values().cloned().collect();
        let right: Vec<String> = self.right_names.values().cloned().collect();
        let (l, r) = psi_split(f, &left, &right)?;
        Ok((
            l.rename(&invert(&self.left_names)),
            r.rename(&invert(&self.right_names)),
        ))
    }

    /// Checks `ψ(τ(m ⊗ n)) = (m, n)` for all monomials of degree at most
    /// `bound`, and that `samples` random ideal elements of the product split
    /// into factor kernel members vanishing at all-ones.
    pub fn verify_tensor_identity<R: Rng>(
        &self,
        bound: u32,
        samples: usize,
        rng: &mut R,
    ) -> Result<bool> {
        if bound > 3 {
            return Err(Error::Unsupported(format!(
                "degree bound {bound} exceeds 3"
            )));
        }
        let lm = monomials_up_to(&self.left.names(), bound);
        let rm = monomials_up_to(&self.right.names(), bound);
        for a in &lm {
            for b in &rm {
                let (l, r) = (
                    LaurentPoly::monomial(a.clone()),
                    LaurentPoly::monomial(b.clone()),
                );
                if self.psi(&self.tau(&l, &r))? != (l, r) {
                    return Ok(false);
                }
            }
        }
        for _ in 0..samples {
            let f = random_ideal_element(&self.combined, rng);
            let (l, r) = self.psi(&f)?;
            if !self.left.kernel_member(&l)?
                || !self.right.kernel_member(&r)?
                || !f.at_ones().is_zero()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Monomials with nonnegative exponents and total degree at most `bound`.
pub fn monomials_up_to(names: &[String], bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for name in names {
        let mut next = Vec::new();
        for m in &out {
            for e in 0..=(bound as i64 - m.degree()) {
                next.push(m.mul(&Monomial::from_exponents([(name.clone(), e)])));
            }
        }
        out = next;
    }
    out
}

/// A monomial in at most two distinct generators with exponents in
/// `[-2, 2]`; negative exponents only on invertible generators.
pub fn random_monomial<R: Rng>(p: &Presentation, rng: &mut R) -> Monomial {
    let gens = p.generators();
    let picks = rand::seq::index::sample(rng, gens.len(), gens.len().min(2));
    let exps: Vec<(String, i64)> = picks
        .into_iter()
        .map(|i| {
            let g = &gens[i];
            let low = if g.polarity == Polarity::Invertible {
                -2
            } else {
                0
            };
            (g.name.clone(), rng.gen_range(low..=2))
        })
        .collect();
    Monomial::from_exponents(exps)
}

/// `Σ c_i m_i g_i` over one to three declared generators `g_i`, with
/// nonzero integer `c_i ∈ [-3, 3]` and random monomials `m_i`.
pub fn random_ideal_element<R: Rng>(p: &Presentation, rng: &mut R) -> LaurentPoly {
    let declared = p.declared();
    if declared.is_empty() {
        return LaurentPoly::zero();
    }
    let mut out = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let g = &declared[rng.gen_range(0..declared.len())];
        let mut c = rng.gen_range(-3i64..=2);
        if c >= 0 {
            c += 1;
        }
        out = out
            + g.mul_monomial(&random_monomial(p, rng))
                .scale(&BigRational::from_integer(c.into()));
    }
    out
}

/// The prism `P × Δ1`: its declared ideal is `P`'s plus the one box relation,
/// each member in the kernel.
pub fn prism_check(p: &Presentation) -> Result<bool> {
    let segment = box_ring(1, false);
    let pp = product_presentation(p, &segment)?;
    let expected: Vec<LaurentPoly> = p
        .declared()
        .iter()
        .map(|d| d.rename(&pp.left_names))
        .chain(segment.declared().iter().map(|d| d.rename(&pp.right_names)))
        .collect();
    if pp.combined.declared() != expected.as_slice() {
        return Ok(false);
    }
    for d in &expected {
        if !pp.combined.kernel_member(d)? {
            return Ok(false);
        }
    }
    Ok(true)
}
