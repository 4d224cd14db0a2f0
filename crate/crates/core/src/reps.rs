//! The two-dimensional representation of the parent J-group
//! `⟨s, t, u | s^a = t^b = u^c = 1, stu = tus = ust⟩` over a cyclotomic
//! field.
//!
//! With `θ = e^{iπ/a}`, `φ = e^{iπ/b}`, `ψ = e^{iπ/c}` and a choice of `q, r`
//! satisfying `qr = θφ(ψ + ψ⁻¹) − θ² − φ²`, the generators act by
//! `s ↦ [[θ², q], [0, 1]]`, `t ↦ [[1, 0], [r, φ²]]` and
//! `u ↦ θφψ · ρ(t)⁻¹ ρ(s)⁻¹`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cosets::{CayleyTable, EnumOptions};
use crate::cyclotomic::{Cyc, CycError, Mat2};
use crate::presentations::{build, FamilyParams};
use crate::words::{Alphabet, GenMap, Word, WordError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("qr = {lhs} but the constraint requires {rhs}")]
    Constraint { lhs: String, rhs: String },
    #[error("labels must be at least 2, got ({0}, {1}, {2})")]
    Labels(u32, u32, u32),
    #[error("unknown (q, r) preset {0:?}")]
    UnknownPreset(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("enumeration failed: {0}")]
    Enumeration(String),
}

/// Named choices of `(q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QrPreset {
    /// `(C, 1)` where `C` is the constraint value; `(0, 0)` when `C = 0`.
    Canonical,
    /// `(1, C)`.
    Alternate,
    /// `(0, 0)`; admissible only when `C = 0`.
    Zero,
    /// `(1, 0)`; admissible only when `C = 0`.
    Unit,
}

impl QrPreset {
    pub const ALL: [QrPreset; 4] = [QrPreset::Canonical, QrPreset::Alternate, QrPreset::Zero, QrPreset::Unit];

    pub fn name(self) -> &'static str {
        match self {
            QrPreset::Canonical => "canonical",
            QrPreset::Alternate => "alternate",
            QrPreset::Zero => "zero",
            QrPreset::Unit => "unit",
        }
    }

    /// The `(q, r)` pair for the given labels, before constraint checking.
    pub fn values(self, a: u32, b: u32, c: u32) -> (Cyc, Cyc) {
        let n = rep_modulus(a, b, c);
        let value = constraint_value(a, b, c);
        match self {
            QrPreset::Canonical if value.is_zero() => (Cyc::zero(n), Cyc::zero(n)),
            QrPreset::Canonical => (value, Cyc::one(n)),
            QrPreset::Alternate => (Cyc::one(n), value),
            QrPreset::Zero => (Cyc::zero(n), Cyc::zero(n)),
            QrPreset::Unit => (Cyc::one(n), Cyc::zero(n)),
        }
    }
}

impl FromStr for QrPreset {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        QrPreset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| RepError::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for QrPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `lcm(2a, 2b, 2c)`.
pub fn rep_modulus(a: u32, b: u32, c: u32) -> u64 {
    [a, b, c].iter().fold(1u64, |acc, &x| acc.lcm(&(2 * x as u64)))
}

/// `e^{iπ/x}` in `Q(ζ_N)`.
fn half_turn_root(n: u64, x: u32) -> Cyc {
    Cyc::zeta(n, (n / (2 * x as u64)) as i64)
}

/// `θφ(ψ + ψ⁻¹) − θ² − φ²`.
pub fn constraint_value(a: u32, b: u32, c: u32) -> Cyc {
    let n = rep_modulus(a, b, c);
    let (theta, phi, psi) = (half_turn_root(n, a), half_turn_root(n, b), half_turn_root(n, c));
    let psi_sum = &psi + &psi.inverse().expect("root of unity is invertible");
    &(&(&theta * &phi) * &psi_sum) - &(&(&theta * &theta) + &(&phi * &phi))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub theta: Cyc,
    pub phi: Cyc,
    pub psi: Cyc,
    pub q: Cyc,
    pub r: Cyc,
    pub ms: Mat2,
    pub mt: Mat2,
    pub mu: Mat2,
}

pub fn build_rho(a: u32, b: u32, c: u32, q: Cyc, r: Cyc) -> Result<Rep, RepError> {
    if a < 2 || b < 2 || c < 2 {
        return Err(RepError::Labels(a, b, c));
    }
    let n = rep_modulus(a, b, c);
    let (q, r) = (q.embed(n.lcm(&q.modulus())), r.embed(n.lcm(&r.modulus())));
    let value = constraint_value(a, b, c);
    let qr = &q * &r;
    if qr != value {
        return Err(RepError::Constraint {
            lhs: qr.to_string(),
            rhs: value.to_string(),
        });
    }
    let n = n.lcm(&qr.modulus());
    let (theta, phi, psi) = (half_turn_root(n, a), half_turn_root(n, b), half_turn_root(n, c));
    let zero = Cyc::zero(n);
    let one = Cyc::one(n);
    let ms = Mat2::new(&theta * &theta, q.embed(n), zero.clone(), one.clone());
    let mt = Mat2::new(one, zero, r.embed(n), &phi * &phi);
    let scalar = &(&theta * &phi) * &psi;
    let mu = mt.inverse()?.mul(&ms.inverse()?).scale(&scalar);
    Ok(Rep {
        a,
        b,
        c,
        theta,
        phi,
        psi,
        q,
        r,
        ms,
        mt,
        mu,
    })
}

pub fn build_preset(a: u32, b: u32, c: u32, preset: QrPreset) -> Result<Rep, RepError> {
    let (q, r) = preset.values(a, b, c);
    build_rho(a, b, c, q, r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    /// `M_s^a`, `M_t^b`, `M_u^c` are the identity.
    pub powers: [bool; 3],
    /// `M_s M_t M_u = M_t M_u M_s = M_u M_s M_t`.
    pub braid: bool,
    /// `M_s M_t M_u = θφψ · Id`.
    pub scalar: bool,
    /// `det M_s = θ²` and `det M_t = φ²`.
    pub determinants: bool,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.powers.iter().all(|&x| x) && self.braid && self.scalar && self.determinants
    }
}

impl Rep {
    pub fn modulus(&self) -> u64 {
        self.theta.modulus()
    }

    /// `θφψ`.
    pub fn central_scalar(&self) -> Cyc {
        &(&self.theta * &self.phi) * &self.psi
    }

    fn generator(&self, g: usize) -> &Mat2 {
        [&self.ms, &self.mt, &self.mu][g]
    }

    pub fn verify_relations(&self) -> Result<RelationReport, RepError> {
        let powers = [
            self.ms.pow(self.a as i64)?.is_identity(),
            self.mt.pow(self.b as i64)?.is_identity(),
            self.mu.pow(self.c as i64)?.is_identity(),
        ];
        let stu = self.ms.mul(&self.mt).mul(&self.mu);
        let tus = self.mt.mul(&self.mu).mul(&self.ms);
        let ust = self.mu.mul(&self.ms).mul(&self.mt);
        let braid = stu == tus && tus == ust;
        let scalar = stu.as_scalar().is_some_and(|x| x == self.central_scalar());
        let determinants = self.ms.det() == &self.theta * &self.theta && self.mt.det() == &self.phi * &self.phi;
        Ok(RelationReport {
            powers,
            braid,
            scalar,
            determinants,
        })
    }

    /// Image of a word over `{s, t, u}`.
    pub fn eval(&self, w: &Word) -> Result<Mat2, RepError> {
        let mut acc = Mat2::identity(self.modulus());
        for l in w.letters() {
            if l.gen() > 2 {
                return Err(WordError::IndexOutOfRange {
                    index: l.gen(),
                    size: 3,
                }
                .into());
            }
            let m = self.generator(l.gen());
            acc = acc.mul(&if l.is_inverse() { m.inverse()? } else { m.clone() });
        }
        Ok(acc)
    }

    /// Image of a word over `{x1, …, xn}` (with `n = b`) through the
    /// embedding `x_i ↦ t^{i-1} s t^{1-i}`.
    pub fn eval_toric(&self, w: &Word) -> Result<Mat2, RepError> {
        let w = toric_embedding(self.b as usize).apply(w)?;
        self.eval(&w)
    }
}

pub fn parent_alphabet() -> Alphabet {
    Alphabet::new(["s", "t", "u"]).expect("valid names")
}

/// `x_i ↦ t^{i-1} s t^{1-i}` from `{x1, …, xn}` into `{s, t, u}`.
pub fn toric_embedding(n: usize) -> GenMap {
    let images = (0..n)
        .map(|i| {
            Word::gen_pow(1, i as i64)
                .concat(&Word::gen(0))
                .concat(&Word::gen_pow(1, -(i as i64)))
        })
        .collect();
    GenMap::new(Alphabet::numbered("x", 1, n), parent_alphabet(), images).expect("images lie in {s, t, u}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `(preset, ρ((x1 x2)^3) = Id)` for the admissible presets of (6,2,3).
    pub rho_x1x2_cubed_identity: Vec<(String, bool)>,
    pub order_x1x2_in_w323: usize,
    /// `ρ(stu)` as a scalar, rendered in the power basis.
    pub rho_stu: String,
    pub rho_stu_is_minus_identity: bool,
    pub rho_stu_order: Option<usize>,
    /// Whether `M_s` and `M_t` commute, per preset.
    pub commuting: Vec<(String, bool)>,
    /// `(x1 x2)^3` is nontrivial in W(6,2,3) yet maps to the identity.
    pub unfaithful: bool,
    pub evidence: Vec<String>,
}

/// For (a,b,c) = (6,2,3) the constraint value is 0 and `ρ((x1 x2)^3) = Id`,
/// although `x1 x2` has order 6 already in the quotient W(3,2,3).
pub fn unfaithfulness_witness() -> Result<WitnessReport, RepError> {
    let (a, b, c) = (6, 2, 3);
    let presets = [QrPreset::Zero, QrPreset::Unit];
    let x1x2_cubed = Word::product_of([0, 1]).pow(3);
    let mut cubed = Vec::new();
    let mut commuting = Vec::new();
    let mut stu = None;
    for preset in presets {
        let rep = build_preset(a, b, c, preset)?;
        cubed.push((preset.name().to_string(), rep.eval_toric(&x1x2_cubed)?.is_identity()));
        commuting.push((preset.name().to_string(), rep.ms.mul(&rep.mt) == rep.mt.mul(&rep.ms)));
        stu.get_or_insert(rep.eval(&Word::product_of([0, 1, 2]))?);
    }
    let stu = stu.expect("at least one preset");
    let minus_one = Cyc::from_int(stu.a[0][0].modulus(), -1);
    let rho_stu_is_minus_identity = stu.as_scalar().is_some_and(|x| x == minus_one);

    let quotient = FamilyParams::toric(3, 2, 3);
    let p = build(&quotient).map_err(|e| RepError::Enumeration(e.to_string()))?;
    let table =
        CayleyTable::from_presentation(&p, EnumOptions::default()).map_err(|e| RepError::Enumeration(e.to_string()))?;
    let order = table.word_order(&Word::product_of([0, 1]));
    let unfaithful = order == 6 && cubed.iter().all(|(_, id)| *id);
    Ok(WitnessReport {
        rho_x1x2_cubed_identity: cubed,
        order_x1x2_in_w323: order,
        rho_stu: stu.as_scalar().map_or_else(|| stu.to_string(), |x| x.to_string()),
        rho_stu_is_minus_identity,
        rho_stu_order: stu.order(24),
        commuting,
        unfaithful,
        evidence: vec![
            format!("constraint value for (6,2,3) is {}", constraint_value(a, b, c)),
            format!("coset enumeration of toric(3,2,3): order {}", table.order()),
            "W(3,2,3) is a quotient of W(6,2,3) since x_i^3 = 1 implies x_i^6 = 1".to_string(),
            format!("x1 x2 has order {order} in W(3,2,3), so (x1 x2)^3 is nontrivial in W(6,2,3)"),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraint_for_623_vanishes() {
        assert!(constraint_value(6, 2, 3).is_zero());
        assert!(!constraint_value(2, 3, 4).is_zero());
    }

    #[test]
    fn relations_hold() {
        for (a, b, c) in [(2, 3, 4), (3, 2, 3), (6, 2, 3)] {
            for preset in [QrPreset::Canonical, QrPreset::Alternate] {
                let rep = build_preset(a, b, c, preset).unwrap();
                assert!(rep.verify_relations().unwrap().passed(), "{a} {b} {c} {preset}");
            }
        }
    }

    #[test]
    fn rejects_bad_qr() {
        let n = rep_modulus(2, 3, 4);
        let err = build_rho(2, 3, 4, Cyc::one(n), Cyc::one(n)).unwrap_err();
        assert!(matches!(err, RepError::Constraint { .. }));
        assert!(build_preset(2, 3, 4, QrPreset::Zero).is_err());
    }

    #[test]
    fn embedding_images() {
        let e = toric_embedding(3);
        let a = parent_alphabet();
        assert_eq!(a.render(e.image(0)), "s");
        assert_eq!(a.render(e.image(1)), "t s t^-1");
    }

    #[test]
    fn presets_parse() {
        assert_eq!("unit".parse::<QrPreset>().unwrap(), QrPreset::Unit);
        assert!("nope".parse::<QrPreset>().is_err());
    }
}
