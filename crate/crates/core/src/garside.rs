//! Garside normal forms for torus knot groups `G(n, m) = ⟨x, y | x^n = y^m⟩`.
//!
//! The positive monoid has Garside element `Δ = x^n = y^m`, which is central.
//! Its simples are `1`, `x^i` (`0 < i < n`), `y^j` (`0 < j < m`) and `Δ`; the
//! only simple multiples of `x^i` are the larger `x`-powers and `Δ`, and
//! likewise for `y`. Hence the left-greedy normal form of a positive word is
//! obtained by cutting `x^n` and `y^m` out of its runs as powers of `Δ` and
//! reading off the remaining maximal runs as factors.
//!
//! Words with inverse letters are first rewritten with
//! `x⁻¹ = Δ⁻¹ x^{n-1}` and `y⁻¹ = Δ⁻¹ y^{m-1}`.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Alphabet, GenMap, Letter, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error("need gcd(n, m) = 1 and n, m >= 2, got ({0}, {1})")]
    Params(u32, u32),
    #[error("{a}*{n} - {b}*{m} = {value}, expected 1")]
    Bezout { n: u32, m: u32, a: i64, b: i64, value: i64 },
    #[error("generator index {0} outside {{x, y}}")]
    Generator(usize),
}

fn check(n: u32, m: u32) -> Result<(), GarsideError> {
    if n < 2 || m < 2 || n.gcd(&m) != 1 {
        return Err(GarsideError::Params(n, m));
    }
    Ok(())
}

/// A proper simple factor `x^i` (`0 < i < n`) or `y^j` (`0 < j < m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Simple {
    X(u32),
    Y(u32),
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simple::X(i) => write!(f, "x^{i}"),
            Simple::Y(j) => write!(f, "y^{j}"),
        }
    }
}

/// `Δ^infimum · factors[0] · factors[1] · …`, factors alternating between
/// `x`- and `y`-powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub infimum: i64,
    pub factors: Vec<Simple>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm {
            infimum: 0,
            factors: Vec::new(),
        }
    }

    /// A word over `{x, y}` representing this element, with `Δ` written as
    /// `x^n`.
    pub fn to_word(&self, n: u32) -> Word {
        let mut w = Word::gen_pow(0, self.infimum * n as i64);
        for f in &self.factors {
            w = w.concat(&match *f {
                Simple::X(i) => Word::gen_pow(0, i as i64),
                Simple::Y(j) => Word::gen_pow(1, j as i64),
            });
        }
        w
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for (i, s) in self.factors.iter().enumerate() {
            f.write_str(if i == 0 { " · " } else { " | " })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn alphabet() -> Alphabet {
    Alphabet::new(["x", "y"]).expect("valid names")
}

pub fn gnf(n: u32, m: u32, w: &Word) -> Result<NormalForm, GarsideError> {
    check(n, m)?;
    let mut infimum = 0i64;
    // runs of the positive word after moving every Δ^{±1} to the front
    let mut runs: Vec<(usize, u32)> = Vec::new();
    let limit = |g: usize| if g == 0 { n } else { m };
    let push = |runs: &mut Vec<(usize, u32)>, g: usize, count: u32, infimum: &mut i64| {
        let mut count = count;
        while count > 0 {
            match runs.last_mut() {
                Some((h, c)) if *h == g => {
                    let take = count.min(limit(g) - *c);
                    *c += take;
                    count -= take;
                    if *c == limit(g) {
                        runs.pop();
                        *infimum += 1;
                    }
                }
                _ => {
                    let take = count.min(limit(g));
                    count -= take;
                    if take == limit(g) {
                        *infimum += 1;
                    } else {
                        runs.push((g, take));
                    }
                }
            }
        }
    };
    for l in w.letters() {
        let g = l.gen();
        if g > 1 {
            return Err(GarsideError::Generator(g));
        }
        if l.is_inverse() {
            infimum -= 1;
            push(&mut runs, g, limit(g) - 1, &mut infimum);
        } else {
            push(&mut runs, g, 1, &mut infimum);
        }
    }
    let factors = runs
        .into_iter()
        .map(|(g, c)| if g == 0 { Simple::X(c) } else { Simple::Y(c) })
        .collect();
    Ok(NormalForm { infimum, factors })
}

pub fn gnf_equal(n: u32, m: u32, u: &Word, v: &Word) -> Result<bool, GarsideError> {
    Ok(gnf(n, m, u)? == gnf(n, m, v)?)
}

/// `x ↦ x1 x2 … xm`, `y ↦ x1 x2 … xn` (indices mod n), from the standard
/// to the classical presentation.
pub fn sigma(n: u32, m: u32) -> Result<GenMap, GarsideError> {
    check(n, m)?;
    let (n, m) = (n as usize, m as usize);
    let images = vec![
        crate::presentations::cyclic_product(0, m, n),
        crate::presentations::cyclic_product(0, n, n),
    ];
    Ok(GenMap::new(alphabet(), Alphabet::numbered("x", 1, n), images).expect("images lie in x1..xn"))
}

/// `y^a x^{-b}`, a meridian when `an − bm = 1`.
pub fn meridian(n: u32, m: u32, a: i64, b: i64) -> Result<Word, GarsideError> {
    check(n, m)?;
    let value = a * n as i64 - b * m as i64;
    if value != 1 {
        return Err(GarsideError::Bezout { n, m, a, b, value });
    }
    Ok(Word::gen_pow(1, a).concat(&Word::gen_pow(0, -b)))
}

/// Least `a > 0` with `an ≡ 1 (mod m)` and the matching `b`.
pub fn bezout_pair(n: u32, m: u32) -> Result<(i64, i64), GarsideError> {
    check(n, m)?;
    let (n, m) = (n as i64, m as i64);
    let a = (1..=m)
        .find(|a| (a * n).rem_euclid(m) == 1 % m)
        .expect("n is invertible mod m");
    Ok((a, (a * n - 1) / m))
}

/// Image in `Z` under `x ↦ m/g`, `y ↦ n/g` with `g = gcd(n, m)`.
pub fn abelianization(n: u32, m: u32, w: &Word) -> i64 {
    let g = n.gcd(&m) as i64;
    let (wx, wy) = (m as i64 / g, n as i64 / g);
    w.letters()
        .iter()
        .map(|l| {
            let v = if l.gen() == 0 { wx } else { wy };
            if l.is_inverse() {
                -v
            } else {
                v
            }
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub n: u32,
    pub m: u32,
    pub trials: usize,
    /// Trials in which inserting a conjugated relator changed the normal form.
    pub changes: usize,
    pub seed: u64,
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    Word::from(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(0..2), rng.gen_bool(0.5)))
            .collect::<Vec<_>>(),
    )
}

/// Inserts `w (x^n y^-m)^{±1} w^-1` at a random position of a random word
/// and compares normal forms.
pub fn relator_insertion_trials(n: u32, m: u32, trials: usize, seed: u64) -> Result<TrialReport, GarsideError> {
    check(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let relator = Word::gen_pow(0, n as i64).concat(&Word::gen_pow(1, -(m as i64)));
    let mut changes = 0;
    for _ in 0..trials {
        let len = rng.gen_range(0..30);
        let base = random_word(&mut rng, len);
        let clen = rng.gen_range(0..8);
        let conj = random_word(&mut rng, clen);
        let r = if rng.gen_bool(0.5) {
            relator.clone()
        } else {
            relator.inverse()
        };
        let inserted = conj.concat(&r).concat(&conj.inverse());
        let at = rng.gen_range(0..=base.len());
        let mut letters = base.letters()[..at].to_vec();
        letters.extend_from_slice(inserted.letters());
        letters.extend_from_slice(&base.letters()[at..]);
        if gnf(n, m, &base)? != gnf(n, m, &Word::from(letters))? {
            changes += 1;
        }
    }
    Ok(TrialReport {
        n,
        m,
        trials,
        changes,
        seed,
    })
}
