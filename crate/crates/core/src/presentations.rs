//! Finite presentations: the family builders, the text file format, and
//! Tietze simplification.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Alphabet, Letter, Word, WordError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid parameters: {0}")]
    Domain(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Relators are freely reduced; every letter must lie in the alphabet.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= alphabet.len() {
                    return Err(WordError::IndexOutOfRange {
                        index: g,
                        size: alphabet.len(),
                    }
                    .into());
                }
            }
        }
        let relators = relators.into_iter().map(|r| r.free_reduce()).collect();
        Ok(Presentation { alphabet, relators })
    }

    pub fn from_texts(gens: &[&str], relators: &[&str]) -> Result<Self, PresentationError> {
        let alphabet = Alphabet::new(gens.iter().copied())?;
        let relators = relators
            .iter()
            .map(|r| alphabet.parse(r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(alphabet, relators)
    }

    pub fn gen_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        self.alphabet.parse(text)
    }

    /// The file format: a `gens:` line, then one `rel:` line per relator.
    pub fn serialize(&self) -> String {
        let mut out = String::from("gens:");
        for name in self.alphabet.names() {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str("rel: ");
            out.push_str(&self.alphabet.render(r));
            out.push('\n');
        }
        out
    }

    /// Parses the file format. `rel: w1 = w2 = ... = wp` yields the relators
    /// `w1 w2^-1, ..., w1 wp^-1`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let lead = content.len() - content.trim_start().len();
            let body = content.trim_start();
            let err = |column: usize, message: String| PresentationError::Parse { line, column, message };
            if let Some(rest) = body.strip_prefix("gens:") {
                if alphabet.is_some() {
                    return Err(err(lead + 1, "duplicate gens line".into()));
                }
                let base = lead + "gens:".len();
                let mut a = Alphabet::default();
                for (off, tok) in crate::words::tokens(rest) {
                    a.push(tok.to_string())
                        .map_err(|e| err(base + off + 1, e.to_string()))?;
                }
                alphabet = Some(a);
            } else if let Some(rest) = body.strip_prefix("rel:") {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| err(lead + 1, "rel line before gens line".into()))?;
                let mut sides = Vec::new();
                let mut offset = lead + "rel:".len();
                for side in rest.split('=') {
                    if side.trim().is_empty() {
                        return Err(err(offset + 1, "empty side in relation".into()));
                    }
                    let w = a.parse(side).map_err(|e| {
                        let local = match &e {
                            WordError::UnknownGenerator { offset, .. } | WordError::BadToken { offset, .. } => *offset,
                            _ => 0,
                        };
                        err(offset + local + 1, e.to_string())
                    })?;
                    sides.push(w);
                    offset += side.len() + 1;
                }
                if sides.len() == 1 {
                    relators.push(sides.pop().unwrap());
                } else {
                    let first = sides[0].clone();
                    for s in &sides[1..] {
                        relators.push(first.concat(&s.inverse()).free_reduce());
                    }
                }
            } else {
                return Err(err(lead + 1, format!("unrecognized line {:?}", body.trim_end())));
            }
        }
        let alphabet = alphabet.ok_or(PresentationError::Parse {
            line: 1,
            column: 1,
            message: "missing gens line".into(),
        })?;
        Presentation::new(alphabet, relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TorusStandard,
    TorusClassical,
    TorusDual,
    Toric,
    JParent,
    CoxeterTriangle,
    AltPlus,
    AltToric,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::TorusStandard,
        Family::TorusClassical,
        Family::TorusDual,
        Family::Toric,
        Family::JParent,
        Family::CoxeterTriangle,
        Family::AltPlus,
        Family::AltToric,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::TorusStandard => "torus-standard",
            Family::TorusClassical => "torus-classical",
            Family::TorusDual => "torus-dual",
            Family::Toric => "toric",
            Family::JParent => "j-parent",
            Family::CoxeterTriangle => "coxeter-triangle",
            Family::AltPlus => "alt-plus",
            Family::AltToric => "alt-toric",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Number of integer parameters: `(n, m)` for torus knot groups,
    /// `(k, n, m)` or `(a, b, c)` otherwise.
    pub fn arity(self) -> usize {
        match self {
            Family::TorusStandard | Family::TorusClassical | Family::TorusDual => 2,
            _ => 3,
        }
    }

    fn needs_coprime(self) -> bool {
        matches!(
            self,
            Family::TorusStandard | Family::TorusClassical | Family::TorusDual | Family::Toric | Family::AltToric
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A family tag with its parameters. For torus knot groups `k` is unused
/// (stored as 0); for `j-parent` the labels are `(a, b, c)` = `(k, n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub k: u32,
    pub n: u32,
    pub m: u32,
}

impl FamilyParams {
    pub fn new(family: Family, params: &[u32]) -> Result<Self, PresentationError> {
        if params.len() != family.arity() {
            return Err(PresentationError::Domain(format!(
                "{family} takes {} parameters, got {}",
                family.arity(),
                params.len()
            )));
        }
        let p = if family.arity() == 2 {
            FamilyParams {
                family,
                k: 0,
                n: params[0],
                m: params[1],
            }
        } else {
            FamilyParams {
                family,
                k: params[0],
                n: params[1],
                m: params[2],
            }
        };
        p.validate()?;
        Ok(p)
    }

    pub fn toric(k: u32, n: u32, m: u32) -> Self {
        FamilyParams {
            family: Family::Toric,
            k,
            n,
            m,
        }
    }

    pub fn with_family(self, family: Family) -> Self {
        FamilyParams { family, ..self }
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let labels: &[u32] = if self.family.arity() == 2 {
            &[self.n, self.m]
        } else {
            &[self.k, self.n, self.m]
        };
        if let Some(bad) = labels.iter().find(|&&l| l < 2) {
            return Err(PresentationError::Domain(format!(
                "label {bad} < 2 for {}",
                self.family
            )));
        }
        if self.family.needs_coprime() && self.n.gcd(&self.m) != 1 {
            return Err(PresentationError::Domain(format!(
                "gcd({}, {}) = {} != 1 for {}",
                self.n,
                self.m,
                self.n.gcd(&self.m),
                self.family
            )));
        }
        Ok(())
    }

    /// Generators standing for reflections: `x_i` for toric groups, `s, t, u`
    /// for parent J-groups, `r_i` for Coxeter triangles.
    pub fn reflection_generators(&self) -> Vec<usize> {
        match self.family {
            Family::Toric | Family::AltToric | Family::TorusClassical => (0..self.n as usize).collect(),
            Family::TorusDual => (0..self.m as usize).collect(),
            Family::JParent | Family::CoxeterTriangle => vec![0, 1, 2],
            Family::TorusStandard | Family::AltPlus => vec![0],
        }
    }

    pub fn label(&self) -> String {
        if self.family.arity() == 2 {
            format!("{} {} {}", self.family, self.n, self.m)
        } else {
            format!("{} {} {} {}", self.family, self.k, self.n, self.m)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Swap `(n, m)` for toric groups with `n > m`.
    pub normalize_toric: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { normalize_toric: true }
    }
}

/// `x_i x_{i+1} ... ` with `len` factors, generator indices taken mod `modulus`
/// (0-based start).
pub fn cyclic_product(start: usize, len: usize, modulus: usize) -> Word {
    Word::product_of((0..len).map(|j| (start + j) % modulus))
}

fn chain_relators(words: Vec<Word>) -> Vec<Word> {
    let first = &words[0];
    words[1..]
        .iter()
        .map(|w| first.concat(&w.inverse()).free_reduce())
        .collect()
}

fn classical_chain(n: usize, m: usize) -> Vec<Word> {
    chain_relators((0..n).map(|i| cyclic_product(i, m, n)).collect())
}

pub fn build(p: &FamilyParams) -> Result<Presentation, PresentationError> {
    build_with(p, BuildOptions::default())
}

pub fn build_with(p: &FamilyParams, opts: BuildOptions) -> Result<Presentation, PresentationError> {
    p.validate()?;
    let (k, n, m) = (p.k as i64, p.n as usize, p.m as usize);
    let pres = match p.family {
        Family::TorusStandard => {
            let a = Alphabet::new(["x", "y"])?;
            let rel = Word::gen_pow(0, n as i64).concat(&Word::gen_pow(1, -(m as i64)));
            Presentation::new(a, vec![rel])?
        }
        Family::TorusClassical => Presentation::new(Alphabet::numbered("x", 1, n), classical_chain(n, m))?,
        Family::TorusDual => Presentation::new(Alphabet::numbered("y", 1, m), classical_chain(m, n))?,
        Family::Toric | Family::AltToric => {
            let (n, m) = if opts.normalize_toric && n > m { (m, n) } else { (n, m) };
            let mut rels: Vec<Word> = (0..n).map(|i| Word::gen_pow(i, k)).collect();
            rels.extend(classical_chain(n, m));
            if p.family == Family::AltToric {
                rels.push(cyclic_product(0, n, n).pow(m as i64));
            }
            Presentation::new(Alphabet::numbered("x", 1, n), rels)?
        }
        Family::JParent => {
            let a = Alphabet::new(["s", "t", "u"])?;
            let stu = Word::product_of([0, 1, 2]);
            let tus = Word::product_of([1, 2, 0]);
            let ust = Word::product_of([2, 0, 1]);
            let mut rels = vec![
                Word::gen_pow(0, k),
                Word::gen_pow(1, n as i64),
                Word::gen_pow(2, m as i64),
            ];
            rels.extend(chain_relators(vec![stu, tus, ust]));
            Presentation::new(a, rels)?
        }
        Family::CoxeterTriangle => {
            let a = Alphabet::numbered("r", 1, 3);
            let mut rels: Vec<Word> = (0..3).map(|i| Word::gen_pow(i, 2)).collect();
            rels.push(Word::product_of([0, 1]).pow(k));
            rels.push(Word::product_of([1, 2]).pow(n as i64));
            rels.push(Word::product_of([2, 0]).pow(m as i64));
            Presentation::new(a, rels)?
        }
        Family::AltPlus => {
            let a = Alphabet::new(["a", "b"])?;
            let ba_inv = Word::from(vec![Letter::new(1, false), Letter::new(0, true)]);
            let rels = vec![Word::gen_pow(0, k), Word::gen_pow(1, n as i64), ba_inv.pow(m as i64)];
            Presentation::new(a, rels)?
        }
    };
    Ok(pres)
}

#[derive(Error, Debug, Clone)]
#[error("Tietze budget of {budget} steps exhausted")]
pub struct BudgetExceeded {
    pub budget: usize,
    pub best: Box<TietzeOutcome>,
}

#[derive(Debug, Clone)]
pub struct TietzeOutcome {
    pub presentation: Presentation,
    /// For each generator of the input, its value as a word over the output
    /// alphabet.
    pub expressions: Vec<Word>,
    /// Input indices of the surviving generators, in output order.
    pub survivors: Vec<usize>,
    pub steps: usize,
}

/// Tietze simplification with a step budget and optionally protected
/// generators that are never eliminated.
///
/// Moves used: free and cyclic reduction of relators, deletion of empty and
/// repeated (up to cyclic permutation and inversion) relators, and
/// elimination of a generator occurring exactly once in some relator. The
/// generator eliminated is the lowest-index eligible one, using its shortest
/// such relator.
///
/// With [`Tietze::shorten`], once no generator can be eliminated, a relator
/// containing more than half of another relator (cyclically, either
/// orientation) has that piece replaced by the shorter complement.
#[derive(Debug, Clone)]
pub struct Tietze {
    input: Presentation,
    protected: HashSet<usize>,
    priority: Vec<usize>,
    shorten: bool,
}

impl Tietze {
    pub fn new(p: &Presentation) -> Self {
        Tietze {
            input: p.clone(),
            protected: HashSet::new(),
            priority: Vec::new(),
            shorten: false,
        }
    }

    /// Generators to consider for elimination before all others, in order.
    pub fn priority(mut self, gens: impl IntoIterator<Item = usize>) -> Self {
        self.priority = gens.into_iter().collect();
        self
    }

    pub fn shorten(mut self, on: bool) -> Self {
        self.shorten = on;
        self
    }

    pub fn protect(mut self, gens: impl IntoIterator<Item = usize>) -> Self {
        self.protected.extend(gens);
        self
    }

    pub fn run(&self, budget: usize) -> Result<TietzeOutcome, BudgetExceeded> {
        let ngens = self.input.gen_count();
        let mut alive = vec![true; ngens];
        let mut exprs: Vec<Word> = (0..ngens).map(Word::gen).collect();
        let mut rels: Vec<Word> = self.input.relators.clone();
        let mut steps = 0;
        loop {
            tidy(&mut rels);
            let Some((g, ri)) = self.pick(&rels, &alive) else {
                if self.shorten && steps < budget && shorten_once(&mut rels) {
                    steps += 1;
                    continue;
                }
                break;
            };
            if steps == budget {
                let best = finish(&self.input, &alive, &exprs, &rels, steps);
                return Err(BudgetExceeded {
                    budget,
                    best: Box::new(best),
                });
            }
            let r = rels.remove(ri);
            let pos = r.letters().iter().position(|l| l.gen() == g).unwrap();
            // r ~ g^e C  =>  g = C^-1 (e = 1) or C (e = -1)
            let rotated = r.rotate(pos);
            let rest = Word::from(rotated.letters()[1..].to_vec());
            let value = if rotated[0].is_inverse() { rest } else { rest.inverse() };
            for rel in rels.iter_mut() {
                *rel = substitute(rel, g, &value);
            }
            for e in exprs.iter_mut() {
                *e = substitute(e, g, &value);
            }
            alive[g] = false;
            steps += 1;
        }
        Ok(finish(&self.input, &alive, &exprs, &rels, steps))
    }

    fn pick(&self, rels: &[Word], alive: &[bool]) -> Option<(usize, usize)> {
        let rest = (0..alive.len()).filter(|g| !self.priority.contains(g));
        self.priority
            .iter()
            .copied()
            .chain(rest)
            .filter(|g| *g < alive.len() && alive[*g] && !self.protected.contains(g))
            .find_map(|g| {
                rels.iter()
                    .enumerate()
                    .filter(|(_, r)| r.occurrences(g) == 1)
                    .min_by_key(|(i, r)| (r.len(), *i))
                    .map(|(i, _)| (g, i))
            })
    }
}

/// Simplifies with no protected generators.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Result<Presentation, BudgetExceeded> {
    Tietze::new(p).run(budget).map(|o| o.presentation)
}

fn tidy(rels: &mut Vec<Word>) {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rels.len());
    for r in rels.drain(..) {
        let r = r.cyclic_reduce();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.cyclic_canonical()) {
            out.push(r);
        }
    }
    *rels = out;
}

/// Replaces, in one relator, a cyclic piece of more than half of another
/// relator by the inverse of the remaining part. Returns whether anything
/// changed.
fn shorten_once(rels: &mut [Word]) -> bool {
    for i in 0..rels.len() {
        for j in 0..rels.len() {
            if i == j || rels[j].len() > rels[i].len() {
                continue;
            }
            if let Some(w) = shorten_by(&rels[i], &rels[j]) {
                rels[i] = w;
                return true;
            }
        }
    }
    false
}

fn shorten_by(r: &Word, q: &Word) -> Option<Word> {
    let (rn, qn) = (r.len(), q.len());
    let doubled: Vec<Letter> = r.letters().iter().chain(r.letters()).copied().collect();
    for piece_len in (qn / 2 + 1..=qn).rev() {
        for base in [q.clone(), q.inverse()] {
            for k in 0..qn {
                let rot = base.rotate(k);
                let piece = &rot.letters()[..piece_len];
                let Some(pos) = (0..rn).find(|&p| &doubled[p..p + piece_len] == piece) else {
                    continue;
                };
                // rot = piece * tail = 1, so piece = tail^-1
                let tail = Word::from(rot.letters()[piece_len..].to_vec());
                let mut out = tail.inverse().into_letters();
                out.extend_from_slice(&doubled[pos + piece_len..pos + rn]);
                return Some(Word::from(out).free_reduce().cyclic_reduce());
            }
        }
    }
    None
}

fn substitute(w: &Word, g: usize, value: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.gen() == g {
            if l.is_inverse() {
                out.extend(value.inverse().into_letters());
            } else {
                out.extend_from_slice(value.letters());
            }
        } else {
            out.push(l);
        }
    }
    Word::from(out).free_reduce()
}

fn finish(input: &Presentation, alive: &[bool], exprs: &[Word], rels: &[Word], steps: usize) -> TietzeOutcome {
    let survivors: Vec<usize> = (0..alive.len()).filter(|&g| alive[g]).collect();
    let mut renumber = vec![usize::MAX; alive.len()];
    for (new, &old) in survivors.iter().enumerate() {
        renumber[old] = new;
    }
    let relabel = |w: &Word| -> Word {
        w.letters()
            .iter()
            .map(|l| Letter::new(renumber[l.gen()], l.is_inverse()))
            .collect()
    };
    let alphabet = Alphabet::new(survivors.iter().map(|&g| input.alphabet.name(g).to_string()))
        .expect("subset of a valid alphabet");
    TietzeOutcome {
        presentation: Presentation {
            alphabet,
            relators: rels.iter().map(relabel).collect(),
        },
        expressions: exprs.iter().map(relabel).collect(),
        survivors,
        steps,
    }
}
