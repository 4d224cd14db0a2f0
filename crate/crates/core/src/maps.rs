//! Homomorphisms between the toric, J-group, Coxeter and torus knot
//! presentations, checked against a word-problem oracle on the target.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cosets::{CayleyTable, EnumOptions};
use crate::coxeter::{CoxeterError, CoxeterSystem};
use crate::garside::{self, GarsideError};
use crate::presentations::{build, build_with, BuildOptions, Family, FamilyParams, Presentation, PresentationError};
use crate::schreier::{Derivation, DerivationError, RelationEquivalence, Step};
use crate::words::{Alphabet, GenMap, Word, WordError};

#[derive(Error, Debug, Clone)]
pub enum MapsError {
    #[error("no word-problem oracle for the target: {0}")]
    OracleUnavailable(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Garside(#[from] GarsideError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error("enumeration failed: {0}")]
    Enumeration(String),
}

/// A row of the list of finite toric reflection groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteToric {
    pub k: u32,
    pub n: u32,
    pub m: u32,
    /// Shephard–Todd name.
    pub name: String,
    /// Name of the quotient by the center, `W_{k,n,m}^+`.
    pub center_quotient: String,
    pub w_plus_order: u64,
}

/// The finite toric reflection groups with `n < m`: six exceptional
/// triples and `(2, 2, m)` for odd `m >= 3`.
pub fn finite_toric(k: u32, n: u32, m: u32) -> Option<FiniteToric> {
    let (n, m) = (n.min(m), n.max(m));
    let row = |name: &str, quotient: &str, order: u64| FiniteToric {
        k,
        n,
        m,
        name: name.to_string(),
        center_quotient: quotient.to_string(),
        w_plus_order: order,
    };
    match (k, n, m) {
        (2, 3, 4) => Some(row("G12", "W(B3)+ = S4", 24)),
        (2, 3, 5) => Some(row("G22", "W(H3)+ = A5", 60)),
        (3, 2, 3) => Some(row("G4", "W(A3)+ = A4", 12)),
        (4, 2, 3) => Some(row("G8", "W(B3)+ = S4", 24)),
        (5, 2, 3) => Some(row("G16", "W(H3)+ = A5", 60)),
        (3, 2, 5) => Some(row("G20", "W(H3)+ = A5", 60)),
        (2, 2, m) if m >= 3 && m % 2 == 1 => Some(row(
            &format!("G({m},{m},2) = I2({m})"),
            &format!("W(A1 x I2({m}))+ = G({m},{m},2)"),
            2 * m as u64,
        )),
        _ => None,
    }
}

/// Word-problem oracle for the target of a homomorphism.
#[derive(Clone)]
pub enum Oracle {
    Coxeter(Arc<CoxeterSystem>),
    Cayley(Arc<CayleyTable>),
    Garside { n: u32, m: u32 },
    Unavailable(String),
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl Oracle {
    pub fn describe(&self) -> String {
        match self {
            Oracle::Coxeter(s) => {
                let c = s.matrix();
                format!(
                    "coxeter normal form on triangle({},{},{})",
                    c.label(0, 1).unwrap_or(0),
                    c.label(1, 2).unwrap_or(0),
                    c.label(2, 0).unwrap_or(0)
                )
            }
            Oracle::Cayley(t) => format!("cayley table of order {}", t.order()),
            Oracle::Garside { n, m } => format!("garside normal form on G({n},{m})"),
            Oracle::Unavailable(why) => format!("unavailable: {why}"),
        }
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool, MapsError> {
        match self {
            Oracle::Coxeter(s) => Ok(s.is_identity(w)?),
            Oracle::Cayley(t) => Ok(t.element(w) == t.identity()),
            Oracle::Garside { n, m } => Ok(garside::gnf(*n, *m, w)? == garside::NormalForm::identity()),
            Oracle::Unavailable(why) => Err(MapsError::OracleUnavailable(why.clone())),
        }
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, MapsError> {
        self.is_identity(&u.concat(&v.inverse()))
    }
}

#[derive(Debug, Clone)]
pub struct Hom {
    pub name: String,
    pub map: GenMap,
    pub source: Presentation,
    pub target: Oracle,
}

impl Hom {
    pub fn apply(&self, w: &Word) -> Result<Word, MapsError> {
        Ok(self.map.apply(w)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingRelator {
    pub index: usize,
    pub relator: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomVerdict {
    pub passed: bool,
    pub checked: usize,
    pub failing: Option<FailingRelator>,
}

/// Every source relator must map to the identity of the target.
pub fn check_hom(h: &Hom) -> Result<HomVerdict, MapsError> {
    for (index, r) in h.source.relators.iter().enumerate() {
        let image = h.map.apply(r)?;
        if !h.target.is_identity(&image)? {
            return Ok(HomVerdict {
                passed: false,
                checked: index + 1,
                failing: Some(FailingRelator {
                    index,
                    relator: h.source.alphabet.render(r),
                    image: h.map.target.render(&image),
                }),
            });
        }
    }
    Ok(HomVerdict {
        passed: true,
        checked: h.source.relators.len(),
        failing: None,
    })
}

fn require_coprime(n: u32, m: u32) -> Result<(), MapsError> {
    if n < 2 || m < 2 || n.gcd(&m) != 1 {
        return Err(MapsError::Params(format!(
            "need gcd(n, m) = 1 with n, m >= 2, got ({n}, {m})"
        )));
    }
    Ok(())
}

/// `toric(k, n, m)` without swapping `n` and `m`.
pub fn toric_presentation(k: u32, n: u32, m: u32) -> Result<Presentation, MapsError> {
    Ok(build_with(
        &FamilyParams::new(Family::Toric, &[k, n, m])?,
        BuildOptions { normalize_toric: false },
    )?)
}

/// `a = r1 r2`, `b = r3 r2` in the triangle group.
pub fn rotation_a() -> Word {
    Word::product_of([0, 1])
}

pub fn rotation_b() -> Word {
    Word::product_of([2, 1])
}

/// `x_i ↦ b^{1-i} a b^{i-1}` into the rotation subgroup of the triangle
/// group, checked by Coxeter normal forms.
pub fn build_phi(k: u32, n: u32, m: u32) -> Result<Hom, MapsError> {
    require_coprime(n, m)?;
    let source = toric_presentation(k, n, m)?;
    let images = (0..n as i64)
        .map(|i| {
            rotation_b()
                .pow(-i)
                .concat(&rotation_a())
                .concat(&rotation_b().pow(i))
                .free_reduce()
        })
        .collect();
    let map = GenMap::new(source.alphabet.clone(), Alphabet::numbered("r", 1, 3), images)?;
    Ok(Hom {
        name: format!("phi({k},{n},{m})"),
        map,
        source,
        target: Oracle::Coxeter(Arc::new(CoxeterSystem::triangle(k, n, m)?)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiParams {
    pub q: u32,
    pub r: u32,
    /// Least positive `ℓ` with `rℓ ≡ 1 (mod n)`.
    pub ell: u32,
}

impl PsiParams {
    pub fn new(n: u32, m: u32) -> Result<Self, MapsError> {
        require_coprime(n, m)?;
        let (q, r) = m.div_rem(&n);
        let ell = (1..=n).find(|l| (r * l) % n == 1 % n).expect("r is invertible mod n");
        Ok(PsiParams { q, r, ell })
    }
}

/// Oracle on `W(k, n, m)`: a Cayley table for the finite groups, and
/// unavailable otherwise (the word problem there is open).
pub fn toric_oracle(k: u32, n: u32, m: u32, opts: EnumOptions) -> Result<Oracle, MapsError> {
    if finite_toric(k, n, m).is_none() {
        return Ok(Oracle::Unavailable(format!(
            "W({k},{n},{m}) is infinite and its word problem is not known to be solvable"
        )));
    }
    let p = toric_presentation(k, n, m)?;
    let table = CayleyTable::from_presentation(&p, opts).map_err(|e| MapsError::Enumeration(e.to_string()))?;
    Ok(Oracle::Cayley(Arc::new(table)))
}

/// `a ↦ x1`, `b ↦ (x1 x2 … xm)^ℓ` (indices mod n), from `alt-plus(k, n, m)`.
pub fn build_psi(k: u32, n: u32, m: u32) -> Result<(Hom, PsiParams), MapsError> {
    let params = PsiParams::new(n, m)?;
    let source = build(&FamilyParams::new(Family::AltPlus, &[k, n, m])?)?;
    let delta = crate::presentations::cyclic_product(0, m as usize, n as usize);
    let images = vec![Word::gen(0), delta.pow(params.ell as i64)];
    let map = GenMap::new(source.alphabet.clone(), Alphabet::numbered("x", 1, n as usize), images)?;
    let target = toric_oracle(k, n, m, EnumOptions::default())?;
    Ok((
        Hom {
            name: format!("psi({k},{n},{m})"),
            map,
            source,
            target,
        },
        params,
    ))
}

/// `x_i ↦ t^{i-1} s t^{1-i}` into the parent J-group.
pub fn build_embedding(k: u32, n: u32, m: u32) -> Result<Hom, MapsError> {
    require_coprime(n, m)?;
    let source = toric_presentation(k, n, m)?;
    let map = crate::reps::toric_embedding(n as usize);
    let target = if finite_toric(k, n, m).is_some() {
        let parent = build(&FamilyParams::new(Family::JParent, &[k, n, m])?)?;
        let table = CayleyTable::from_presentation(&parent, EnumOptions::default())
            .map_err(|e| MapsError::Enumeration(e.to_string()))?;
        Oracle::Cayley(Arc::new(table))
    } else {
        Oracle::Unavailable(format!("parent J-group of ({k},{n},{m}) is infinite"))
    };
    Ok(Hom {
        name: format!("embedding({k},{n},{m})"),
        map,
        source,
        target,
    })
}

/// `s ↦ r1 r2`, `t ↦ r2 r3`, `u ↦ r3 r1` from the parent J-group onto the
/// rotation subgroup of the triangle group.
pub fn build_projection(k: u32, n: u32, m: u32) -> Result<Hom, MapsError> {
    let source = build(&FamilyParams::new(Family::JParent, &[k, n, m])?)?;
    let images = vec![
        Word::product_of([0, 1]),
        Word::product_of([1, 2]),
        Word::product_of([2, 0]),
    ];
    let map = GenMap::new(source.alphabet.clone(), Alphabet::numbered("r", 1, 3), images)?;
    Ok(Hom {
        name: format!("projection({k},{n},{m})"),
        map,
        source,
        target: Oracle::Coxeter(Arc::new(CoxeterSystem::triangle(k, n, m)?)),
    })
}

/// `c = (x1 x2 … xn)^m`.
pub fn central_element(n: u32, m: u32) -> Result<Word, MapsError> {
    require_coprime(n, m)?;
    Ok(crate::presentations::cyclic_product(0, n as usize, n as usize).pow(m as i64))
}

/// `δ = x1 x2 … xm` (indices mod n).
pub fn delta(n: u32, m: u32) -> Word {
    crate::presentations::cyclic_product(0, m as usize, n as usize)
}

/// `φ∘ψ` fixes `a` and `b` as elements of the rotation subgroup.
pub fn phi_psi_fixes(k: u32, n: u32, m: u32) -> Result<[bool; 2], MapsError> {
    let phi = build_phi(k, n, m)?;
    let (psi, _) = build_psi(k, n, m)?;
    let a = phi.apply(psi.map.image(0))?;
    let b = phi.apply(psi.map.image(1))?;
    Ok([
        phi.target.equal(&a, &rotation_a())?,
        phi.target.equal(&b, &rotation_b())?,
    ])
}

/// Relators of `alt-plus(k, n, m)` pushed through `ψ` then `φ` are trivial,
/// which is how well-definedness of `ψ` is checked.
pub fn check_psi_via_phi(k: u32, n: u32, m: u32) -> Result<HomVerdict, MapsError> {
    let phi = build_phi(k, n, m)?;
    let (psi, _) = build_psi(k, n, m)?;
    let composite = Hom {
        name: format!("phi.psi({k},{n},{m})"),
        map: psi.map.then(&phi.map)?,
        source: psi.source,
        target: phi.target,
    };
    check_hom(&composite)
}

/// Composite of the embedding and the projection agrees with `φ` on every
/// generator.
pub fn embedding_matches_phi(k: u32, n: u32, m: u32) -> Result<bool, MapsError> {
    let phi = build_phi(k, n, m)?;
    let composite = build_embedding_map(n)?.then(&build_projection(k, n, m)?.map)?;
    for i in 0..n as usize {
        if !phi.target.equal(composite.image(i), phi.map.image(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn build_embedding_map(n: u32) -> Result<GenMap, MapsError> {
    Ok(crate::reps::toric_embedding(n as usize))
}

#[derive(Debug, Clone)]
pub struct CentralityWitness {
    pub n: u32,
    pub m: u32,
    /// Remainder of `m` modulo `n`.
    pub r: u32,
    /// The relations `δ = x_j … x_{j+m-1}` used by every step.
    pub relations: Vec<(Word, Word)>,
    /// `x_i δ -> δ x_{i+r}`, one per generator.
    pub shifts: Vec<Derivation>,
    /// `x_i c -> c x_i`, one per generator.
    pub central: Vec<Derivation>,
}

impl CentralityWitness {
    pub fn check(&self) -> Result<(), MapsError> {
        for d in self.shifts.iter().chain(&self.central) {
            d.check(&self.relations)?;
        }
        Ok(())
    }

    /// Replays every intermediate word through `h` and checks that it stays
    /// equal to the image of the start.
    pub fn replay(&self, h: &Hom) -> Result<bool, MapsError> {
        for d in self.shifts.iter().chain(&self.central) {
            let start = h.apply(&d.start)?;
            for w in d.states(&self.relations)? {
                if !h.target.equal(&h.apply(&w)?, &start)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Explicit rewriting chains, using only the defining chain relations of
/// `toric(k, n, m)`, for `x_i δ = δ x_{i+r}` and for centrality of `c`.
pub fn centrality_witness(n: u32, m: u32) -> Result<CentralityWitness, MapsError> {
    require_coprime(n, m)?;
    let eq = RelationEquivalence::new(n as usize, m as usize);
    let shifts = eq.conjugation_from_chain();
    let (nu, mu) = (n as usize, m as usize);
    let c = central_element(n, m)?;
    // (x1 … xn)^m cut into n blocks of length m; block b starts at x_{bm+1}
    let block_start = |b: usize| (b * mu) % nu;
    let central = (0..nu)
        .map(|i| {
            let mut steps = Vec::new();
            for b in 0..nu {
                if block_start(b) != 0 {
                    steps.push(Step::Rewrite {
                        relation: block_start(b) - 1,
                        at: 1 + b * mu,
                        forward: false,
                    });
                }
            }
            // now x_i δ^n; move the letter through one δ at a time
            for b in 0..nu {
                let g = (i + b * mu) % nu;
                let off = b * mu;
                let next = (g + 1) % nu;
                if next != 0 {
                    steps.push(Step::Rewrite {
                        relation: next - 1,
                        at: off + 1,
                        forward: true,
                    });
                }
                if g != 0 {
                    steps.push(Step::Rewrite {
                        relation: g - 1,
                        at: off,
                        forward: false,
                    });
                }
            }
            for b in 0..nu {
                if block_start(b) != 0 {
                    steps.push(Step::Rewrite {
                        relation: block_start(b) - 1,
                        at: b * mu,
                        forward: true,
                    });
                }
            }
            Derivation {
                start: Word::gen(i).concat(&c),
                end: c.concat(&Word::gen(i)),
                steps,
            }
        })
        .collect();
    Ok(CentralityWitness {
        n,
        m,
        r: m % n,
        relations: eq.chain,
        shifts,
        central,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceReport {
    pub toric_order: usize,
    pub c_order: usize,
    /// `|W_{k,n,m}^+|`, half the order of the triangle group.
    pub w_plus_order: usize,
    /// Order of `alt-plus(k, n, m)` by coset enumeration.
    pub alt_plus_order: usize,
    /// Size of `φ(W(k, n, m))` inside `W^+`.
    pub image_order: usize,
    /// `c` generates the center of `W(k, n, m)`.
    pub center_is_c: bool,
    /// `(x1 … xn)^m = (x1 … xm)^n`.
    pub c_equals_delta_power: bool,
}

impl ExactSequenceReport {
    pub fn holds(&self) -> bool {
        self.toric_order == self.c_order * self.w_plus_order
            && self.image_order == self.w_plus_order
            && self.alt_plus_order == self.w_plus_order
            && self.center_is_c
            && self.c_equals_delta_power
    }
}

fn enumerate(p: &Presentation, opts: EnumOptions) -> Result<CayleyTable, MapsError> {
    CayleyTable::from_presentation(p, opts).map_err(|e| MapsError::Enumeration(e.to_string()))
}

/// `1 -> ⟨c⟩ -> W(k, n, m) -> W^+ -> 1` on a finite instance.
pub fn exact_sequence(k: u32, n: u32, m: u32, opts: EnumOptions) -> Result<ExactSequenceReport, MapsError> {
    let toric = enumerate(&toric_presentation(k, n, m)?, opts)?;
    let c = central_element(n, m)?;
    let c_elem = toric.element(&c);
    let c_powers: HashSet<usize> = toric.powers(c_elem).into_iter().collect();
    let center: HashSet<usize> = toric.center().into_iter().collect();
    let delta_n = delta(n, m).pow(n as i64);

    let triangle = enumerate(&build(&FamilyParams::new(Family::CoxeterTriangle, &[k, n, m])?)?, opts)?;
    let alt = enumerate(&build(&FamilyParams::new(Family::AltPlus, &[k, n, m])?)?, opts)?;

    let phi = build_phi(k, n, m)?;
    let gens: Vec<usize> = (0..n as usize).map(|i| triangle.element(phi.map.image(i))).collect();
    let image = triangle.subgroup_closure(&gens);

    Ok(ExactSequenceReport {
        toric_order: toric.order(),
        c_order: toric.element_order(c_elem),
        w_plus_order: triangle.order() / 2,
        alt_plus_order: alt.order(),
        image_order: image.len(),
        center_is_c: center == c_powers,
        c_equals_delta_power: toric.element(&delta_n) == c_elem,
    })
}

/// `(stu)^{nm}` equals the image of `c` in the finite parent J-group.
pub fn stu_power_is_c(k: u32, n: u32, m: u32) -> Result<bool, MapsError> {
    let emb = build_embedding(k, n, m)?;
    let Oracle::Cayley(table) = &emb.target else {
        return Err(MapsError::OracleUnavailable(emb.target.describe()));
    };
    let stu = Word::product_of([0, 1, 2]).pow((n * m) as i64);
    let c = emb.apply(&central_element(n, m)?)?;
    Ok(table.element(&stu) == table.element(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_images() {
        let phi = build_phi(6, 2, 3).unwrap();
        let r = Alphabet::numbered("r", 1, 3);
        assert_eq!(r.render(phi.map.image(0)), "r1 r2");
        assert!(check_hom(&phi).unwrap().passed);
        let c = central_element(2, 3).unwrap();
        assert!(phi.target.is_identity(&phi.apply(&c).unwrap()).unwrap());
    }

    #[test]
    fn corrupted_map_fails() {
        let mut phi = build_phi(3, 2, 3).unwrap();
        phi.map = GenMap::new(
            phi.map.source.clone(),
            phi.map.target.clone(),
            vec![Word::gen(0), phi.map.image(1).clone()],
        )
        .unwrap();
        let v = check_hom(&phi).unwrap();
        assert!(!v.passed);
        assert_eq!(v.failing.unwrap().relator, "x1^3");
    }

    #[test]
    fn psi_params() {
        assert_eq!(PsiParams::new(3, 4).unwrap(), PsiParams { q: 1, r: 1, ell: 1 });
        assert_eq!(PsiParams::new(3, 5).unwrap(), PsiParams { q: 1, r: 2, ell: 2 });
        assert_eq!(phi_psi_fixes(2, 3, 7).unwrap(), [true, true]);
    }

    #[test]
    fn centrality() {
        for (n, m) in [(2, 3), (3, 4), (3, 5), (2, 7)] {
            let w = centrality_witness(n, m).unwrap();
            w.check().unwrap();
        }
        let x = Alphabet::numbered("x", 1, 2);
        let w = centrality_witness(2, 3).unwrap();
        assert_eq!(x.render(&w.shifts[0].start), "x1^2 x2 x1");
        assert_eq!(x.render(&w.shifts[0].end), "x1 x2 x1 x2");
    }

    #[test]
    fn unavailable_oracle() {
        let (psi, _) = build_psi(6, 2, 3).unwrap();
        assert!(matches!(check_hom(&psi), Err(MapsError::OracleUnavailable(_))));
    }
}
