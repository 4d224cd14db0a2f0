//! Reidemeister–Schreier rewriting: subgroup presentations from a complete
//! coset table, the `u^i t^j` transversal of a J-group, closed forms for the
//! subgroup generators, and a checker for explicit rewriting derivations.

use thiserror::Error;

use crate::cosets::{normal_closure, CosetError, CosetTable, EnumOptions};
use crate::presentations::{build, BudgetExceeded, Family, FamilyParams, Presentation, Tietze, TietzeOutcome};
use crate::words::{Alphabet, Letter, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SchreierError {
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error("{0} is out of range")]
    Range(String),
    #[error("transversal does not match the table ({0})")]
    Mismatch(String),
    #[error("Tietze budget of {0} steps exhausted")]
    Budget(usize),
    #[error("invalid parameters: {0}")]
    Params(String),
}

/// Order in which the breadth-first search explores columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnOrder {
    /// `x1, x1^-1, x2, x2^-1, ...`
    Natural,
    /// For the parent J-group on `s, t, u`: forward columns `u, t, s`, which
    /// yields the representatives `u^i t^j`.
    Toric,
    Custom(Vec<usize>),
}

impl ColumnOrder {
    fn columns(&self, ngens: usize) -> Vec<usize> {
        match self {
            ColumnOrder::Natural => (0..2 * ngens).collect(),
            ColumnOrder::Toric => vec![4, 2, 0],
            ColumnOrder::Custom(cols) => cols.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub reps: Vec<Word>,
    /// Tree edge into each coset other than 0: `(parent, letter)`.
    pub tree: Vec<Option<(usize, Letter)>>,
    pub order: ColumnOrder,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Every prefix of a representative is itself a representative.
    pub fn is_schreier(&self, ct: &CosetTable) -> bool {
        self.reps.iter().enumerate().all(|(c, rep)| {
            (0..=rep.len()).all(|k| {
                let prefix = Word::from(rep.letters()[..k].to_vec());
                let coset = ct.act(0, &prefix);
                self.reps[coset] == prefix
            }) && ct.act(0, rep) == c
        }) && self.reps.first().is_some_and(|r| r.is_empty())
    }
}

pub fn schreier_transversal(ct: &CosetTable, order: ColumnOrder) -> Result<Transversal, SchreierError> {
    ct.require_complete()?;
    let cols = order.columns(ct.gen_count());
    if let Some(&bad) = cols.iter().find(|&&c| c >= ct.columns()) {
        return Err(SchreierError::Range(format!("column {bad}")));
    }
    let tree = ct.bfs_tree(&cols);
    if tree.iter().skip(1).any(Option::is_none) {
        return Err(SchreierError::Mismatch(
            "column order does not reach every coset".into(),
        ));
    }
    let reps = ct.representatives(&cols);
    Ok(Transversal { reps, tree, order })
}

/// A Schreier generator `rep(c) x rep(c x)^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupGenerator {
    pub name: String,
    pub coset: usize,
    pub gen: usize,
    pub value: Word,
}

#[derive(Debug, Clone)]
pub struct RsResult {
    pub presentation: Presentation,
    pub generators: Vec<SubgroupGenerator>,
    /// `(coset, relator index)` each output relator was rewritten from.
    pub sources: Vec<(usize, usize)>,
}

impl RsResult {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.presentation.alphabet.index_of(name)
    }

    /// The rewritten relator `r` at `coset`, or `None` if it was trivial.
    pub fn relator_at(&self, coset: usize, r: usize) -> Option<&Word> {
        self.sources
            .iter()
            .position(|&src| src == (coset, r))
            .map(|i| &self.presentation.relators[i])
    }
}

fn toric_label(rep: &Word) -> (usize, usize) {
    (rep.occurrences(2), rep.occurrences(1))
}

/// Rewrites every relator at every coset (cosets outer, relators inner) in
/// terms of the nontrivial Schreier generators. Generators are ordered by
/// group generator, then coset. With the toric column order they are named
/// `x_i_j` after the representative `u^i t^j`; otherwise `x_c` for coset `c`.
pub fn rs_presentation(p: &Presentation, ct: &CosetTable, tr: &Transversal) -> Result<RsResult, SchreierError> {
    ct.require_complete()?;
    if tr.len() != ct.rows() {
        return Err(SchreierError::Mismatch(format!(
            "{} representatives for {} cosets",
            tr.len(),
            ct.rows()
        )));
    }
    let ngens = p.gen_count();
    let mut index = vec![vec![None; ngens]; ct.rows()];
    let mut generators = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for g in 0..ngens {
        for (c, rep) in tr.reps.iter().enumerate() {
            let target = ct.act_letter(c, Letter::new(g, false));
            let value = rep
                .concat(&Word::gen(g))
                .concat(&tr.reps[target].inverse())
                .free_reduce();
            if value.is_empty() {
                continue;
            }
            let gname = p.alphabet.name(g);
            let name = if tr.order == ColumnOrder::Toric {
                let (i, j) = toric_label(rep);
                format!("{gname}_{i}_{j}")
            } else {
                format!("{gname}_{c}")
            };
            index[c][g] = Some(generators.len());
            generators.push(SubgroupGenerator {
                name,
                coset: c,
                gen: g,
                value,
            });
        }
    }
    let alphabet =
        Alphabet::new(generators.iter().map(|g| g.name.clone())).map_err(|e| SchreierError::Mismatch(e.to_string()))?;
    let mut relators = Vec::new();
    let mut sources = Vec::new();
    for c in 0..ct.rows() {
        for (ri, r) in p.relators.iter().enumerate() {
            let mut out = Vec::new();
            let mut d = c;
            for &l in r.letters() {
                if l.is_inverse() {
                    let prev = ct.act_letter(d, l);
                    if let Some(i) = index[prev][l.gen()] {
                        out.push(Letter::new(i, true));
                    }
                    d = prev;
                } else {
                    if let Some(i) = index[d][l.gen()] {
                        out.push(Letter::new(i, false));
                    }
                    d = ct.act_letter(d, l);
                }
            }
            debug_assert_eq!(d, c);
            let w = Word::from(out).free_reduce();
            if !w.is_empty() {
                relators.push(w);
                sources.push((c, ri));
            }
        }
    }
    let presentation = Presentation { alphabet, relators };
    Ok(RsResult {
        presentation,
        generators,
        sources,
    })
}

/// Rewrites a word lying in the subgroup as a word in the Schreier generators.
pub fn rewrite_in_subgroup(rs: &RsResult, ct: &CosetTable, w: &Word) -> Option<Word> {
    let mut out = Vec::new();
    let mut d = 0;
    let find = |c: usize, g: usize| rs.generators.iter().position(|x| x.coset == c && x.gen == g);
    for &l in w.letters() {
        if l.is_inverse() {
            let prev = ct.act_letter(d, l);
            if let Some(i) = find(prev, l.gen()) {
                out.push(Letter::new(i, true));
            }
            d = prev;
        } else {
            if let Some(i) = find(d, l.gen()) {
                out.push(Letter::new(i, false));
            }
            d = ct.act_letter(d, l);
        }
    }
    (d == 0).then(|| Word::from(out).free_reduce())
}

/// Simplifies the toric-order RS presentation of the normal closure of `s`
/// in the parent J-group with labels `(k, n, m)`, keeping `s_0_j`, renamed
/// `x_{j+1}`, as the surviving generators. Generators are eliminated in the
/// order of the inductive argument: the `t` generators, then for `i = m-1`
/// down to `0` the pairs `u_i_p`, `s_i_{p-1}` for increasing `p`.
pub fn simplify_toric_rs(rs: &RsResult, n: usize, m: usize, budget: usize) -> Result<TietzeOutcome, BudgetExceeded> {
    let protected: Vec<usize> = (0..n).filter_map(|j| rs.index_of(&format!("s_0_{j}"))).collect();
    let mut order: Vec<String> = (0..m).flat_map(|i| (0..n).map(move |j| format!("t_{i}_{j}"))).collect();
    order.push(format!("u_{}_0", m - 1));
    for i in (0..m).rev() {
        for p in 1..=n {
            if p < n {
                order.push(format!("u_{i}_{p}"));
            }
            order.push(format!("s_{i}_{}", p - 1));
        }
    }
    let priority: Vec<usize> = order.iter().filter_map(|name| rs.index_of(name)).collect();
    let mut out = Tietze::new(&rs.presentation)
        .protect(protected)
        .priority(priority)
        .shorten(true)
        .run(budget)?;
    let names: Vec<String> = out
        .presentation
        .alphabet
        .names()
        .iter()
        .map(
            |name| match name.strip_prefix("s_0_").and_then(|j| j.parse::<usize>().ok()) {
                Some(j) => format!("x{}", j + 1),
                None => name.clone(),
            },
        )
        .collect();
    out.presentation.alphabet = Alphabet::new(names).expect("renamed generators stay distinct");
    Ok(out)
}

/// The full pipeline from the parent J-group with labels `(k, n, m)` to a
/// presentation of the normal closure of `s`.
#[derive(Debug, Clone)]
pub struct ToricDerivation {
    pub parent: Presentation,
    /// Generators of the normal closure fed to the enumeration.
    pub closure_generators: Vec<Word>,
    pub table: CosetTable,
    pub transversal: Transversal,
    pub rs: RsResult,
    pub simplified: TietzeOutcome,
}

impl ToricDerivation {
    pub fn index(&self) -> usize {
        self.table.rows()
    }
}

pub fn derive_toric(
    k: u32,
    n: u32,
    m: u32,
    opts: EnumOptions,
    budget: usize,
) -> Result<ToricDerivation, SchreierError> {
    let params = FamilyParams::new(Family::JParent, &[k, n, m]).map_err(|e| SchreierError::Params(e.to_string()))?;
    let parent = build(&params).map_err(|e| SchreierError::Params(e.to_string()))?;
    let closure = normal_closure(&parent, &[Word::gen(0)], opts, 32)?;
    let transversal = schreier_transversal(&closure.table, ColumnOrder::Toric)?;
    let rs = rs_presentation(&parent, &closure.table, &transversal)?;
    let simplified =
        simplify_toric_rs(&rs, n as usize, m as usize, budget).map_err(|e| SchreierError::Budget(e.budget))?;
    Ok(ToricDerivation {
        parent,
        closure_generators: closure.generators,
        table: closure.table,
        transversal,
        rs,
        simplified,
    })
}

/// Elimination of the toric-order RS presentation following the inductive
/// argument, solving specific rewritten relators one generator at a time.
#[derive(Debug, Clone)]
pub struct ToricElimination {
    /// Value of every RS generator as a word over `s0..s{n-1}`.
    pub values: Vec<Word>,
    /// Relators left over at coset row `i = 0`, one per `s_0_j`: `s_j` times
    /// the inverse of the value derived for it.
    pub residual: Vec<Word>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EliminationError {
    #[error("no rewritten relator {relator} at coset ({i}, {j})")]
    MissingRelator { i: usize, j: usize, relator: usize },
    #[error("generator {0} does not occur exactly once where it is solved")]
    NotSolvable(String),
    #[error("generator {0} has no value")]
    Unsolved(String),
}

/// Solves the relator `r` (over RS generators) for generator `g`, given
/// values over the target alphabet for every other generator in it.
fn solve(r: &Word, g: usize, values: &[Option<Word>], name: &str) -> Result<Word, EliminationError> {
    if r.occurrences(g) != 1 {
        return Err(EliminationError::NotSolvable(name.to_string()));
    }
    let pos = r.letters().iter().position(|l| l.gen() == g).unwrap();
    let rot = r.rotate(pos);
    let mut rest = Word::identity();
    for &l in &rot.letters()[1..] {
        let v = values[l.gen()]
            .as_ref()
            .ok_or_else(|| EliminationError::Unsolved(format!("#{}", l.gen())))?;
        rest = rest.concat(&if l.is_inverse() { v.inverse() } else { v.clone() });
    }
    let rest = rest.free_reduce();
    Ok(if rot[0].is_inverse() { rest } else { rest.inverse() })
}

/// Evaluates an RS-generator word once all its letters have values.
fn evaluate(w: &Word, values: &[Option<Word>]) -> Result<Word, EliminationError> {
    let mut out = Word::identity();
    for &l in w.letters() {
        let v = values[l.gen()]
            .as_ref()
            .ok_or_else(|| EliminationError::Unsolved(format!("#{}", l.gen())))?;
        out = out.concat(&if l.is_inverse() { v.inverse() } else { v.clone() });
    }
    Ok(out.free_reduce())
}

/// Requires `rs` from the toric column order on the parent J-group with
/// relators in builder order (`s^k, t^n, u^m, stu(tus)^-1, stu(ust)^-1`).
///
/// Order of solutions: `t_i_{n-1}` and `u_{m-1}_0` from the power relators;
/// then for `i = m-1` down to `1` and `p = 1..n-1`: `u_i_p` from the quotient
/// of the two braid-type relators at `u^i t^{p-1}`, `s_i_{p-1}` from the
/// first of them, and finally `s_i_{n-1}` from the first one at
/// `u^i t^{n-1}`. Row `i = 0` is solved the same way for the `u_0_p`, and
/// its `s_0_j` equations become the residual relators.
pub fn toric_elimination(
    rs: &RsResult,
    ct: &CosetTable,
    tr: &Transversal,
    n: usize,
    m: usize,
) -> Result<ToricElimination, EliminationError> {
    let mut coset_of = std::collections::HashMap::new();
    for (c, rep) in tr.reps.iter().enumerate() {
        coset_of.insert(toric_label(rep), c);
    }
    let _ = ct;
    let ngen = rs.generators.len();
    let mut values: Vec<Option<Word>> = vec![None; ngen];
    let idx = |name: &str| rs.index_of(name);
    let rel = |i: usize, j: usize, r: usize| -> Result<&Word, EliminationError> {
        coset_of
            .get(&(i, j))
            .and_then(|&c| rs.relator_at(c, r))
            .ok_or(EliminationError::MissingRelator { i, j, relator: r })
    };
    for j in 0..n {
        if let Some(g) = idx(&format!("s_0_{j}")) {
            values[g] = Some(Word::gen(j));
        }
    }
    for i in 0..m {
        let name = format!("t_{i}_{}", n - 1);
        if let Some(g) = idx(&name) {
            values[g] = Some(solve(rel(i, 0, 1)?, g, &values, &name)?);
        }
    }
    let name = format!("u_{}_0", m - 1);
    if let Some(g) = idx(&name) {
        values[g] = Some(solve(rel(0, 0, 2)?, g, &values, &name)?);
    }
    let mut residual = Vec::new();
    for i in (0..m).rev() {
        for p in 1..n {
            let uname = format!("u_{i}_{p}");
            let g = idx(&uname).ok_or_else(|| EliminationError::Unsolved(uname.clone()))?;
            let quotient = rel(i, p - 1, 3)?.inverse().concat(rel(i, p - 1, 4)?).free_reduce();
            values[g] = Some(solve(&quotient, g, &values, &uname)?);
            let sname = format!("s_{i}_{}", p - 1);
            let sg = idx(&sname).ok_or_else(|| EliminationError::Unsolved(sname.clone()))?;
            if i == 0 {
                residual.push(evaluate(rel(i, p - 1, 3)?, &values)?);
            } else {
                values[sg] = Some(solve(rel(i, p - 1, 3)?, sg, &values, &sname)?);
            }
        }
        let sname = format!("s_{i}_{}", n - 1);
        let sg = idx(&sname).ok_or_else(|| EliminationError::Unsolved(sname.clone()))?;
        if i == 0 {
            residual.push(evaluate(rel(i, n - 1, 3)?, &values)?);
        } else {
            values[sg] = Some(solve(rel(i, n - 1, 3)?, sg, &values, &sname)?);
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(g, v)| v.ok_or_else(|| EliminationError::Unsolved(rs.generators[g].name.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ToricElimination { values, residual })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    S,
    U,
}

/// The closed-form expression of the generator labeled `s_{m-1-l, p-1}`
/// (`GenKind::S`, `1 <= p <= n`) or `u_{m-1-l, p}` (`GenKind::U`,
/// `1 <= p <= n-1`) as a word over `s0, ..., s{n-1}` (generator `j` is `s_j`,
/// indices mod `n`).
pub fn closed_form_generator(n: usize, m: usize, which: GenKind, l: usize, p: usize) -> Result<Word, SchreierError> {
    if l >= m {
        return Err(SchreierError::Range(format!("l = {l} (m = {m})")));
    }
    let p_max = match which {
        GenKind::S => n,
        GenKind::U => n - 1,
    };
    if p < 1 || p > p_max {
        return Err(SchreierError::Range(format!("p = {p} (n = {n})")));
    }
    let prefix = Word::product_of((0..=l).map(|i| i % n));
    let middle = match which {
        GenKind::S => Word::gen((p + l) % n),
        GenKind::U => Word::gen((p + l) % n).inverse(),
    };
    // s-case conjugates by s0..sl; u-case closes with s_{l-1}^-1 .. s0^-1
    let tail_len = match which {
        GenKind::S => l + 1,
        GenKind::U => l,
    };
    let tail = Word::product_of((0..tail_len).map(|i| i % n)).inverse();
    Ok(prefix.concat(&middle).concat(&tail).free_reduce())
}

/// The RS label `(i, j)` that a closed form describes.
pub fn closed_form_label(m: usize, which: GenKind, l: usize, p: usize) -> (usize, usize) {
    match which {
        GenKind::S => (m - 1 - l, p - 1),
        GenKind::U => (m - 1 - l, p),
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DerivationError {
    #[error("step {step}: relation {relation} does not exist")]
    NoSuchRelation { step: usize, relation: usize },
    #[error("step {step}: pattern not found at position {at}")]
    NoMatch { step: usize, at: usize },
    #[error("step {step}: position {at} out of range")]
    OutOfRange { step: usize, at: usize },
    #[error("derivation ends at {found:?}, expected {expected:?}")]
    WrongEnd { found: Word, expected: Word },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Cancel all adjacent inverse pairs.
    FreeReduce,
    /// Insert `l l^-1` before position `at`.
    Insert { at: usize, letter: Letter },
    /// Replace one side of a relation by the other at position `at`.
    Rewrite { relation: usize, at: usize, forward: bool },
}

/// A claimed chain `start -> ... -> end` of elementary moves using the
/// given relations `lhs = rhs`.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<Step>,
}

impl Derivation {
    /// Every intermediate word, starting with `start`.
    pub fn states(&self, relations: &[(Word, Word)]) -> Result<Vec<Word>, DerivationError> {
        let mut w: Vec<Letter> = self.start.letters().to_vec();
        let mut out = vec![self.start.clone()];
        for (i, step) in self.steps.iter().enumerate() {
            match *step {
                Step::FreeReduce => w = Word::from(w).free_reduce().into_letters(),
                Step::Insert { at, letter } => {
                    if at > w.len() {
                        return Err(DerivationError::OutOfRange { step: i, at });
                    }
                    w.splice(at..at, [letter, letter.inverse()]);
                }
                Step::Rewrite { relation, at, forward } => {
                    let (lhs, rhs) = relations
                        .get(relation)
                        .ok_or(DerivationError::NoSuchRelation { step: i, relation })?;
                    let (from, to) = if forward { (lhs, rhs) } else { (rhs, lhs) };
                    let end = at + from.len();
                    if end > w.len() || &w[at..end] != from.letters() {
                        return Err(DerivationError::NoMatch { step: i, at });
                    }
                    w.splice(at..end, to.letters().iter().copied());
                }
            }
            out.push(Word::from(w.clone()));
        }
        Ok(out)
    }

    pub fn check(&self, relations: &[(Word, Word)]) -> Result<(), DerivationError> {
        let found = self.states(relations)?.pop().expect("states include the start");
        if found != self.end {
            return Err(DerivationError::WrongEnd {
                found,
                expected: self.end.clone(),
            });
        }
        Ok(())
    }
}

/// Builds derivations by locating patterns in the current word.
struct Builder<'a> {
    relations: &'a [(Word, Word)],
    word: Vec<Letter>,
    steps: Vec<Step>,
    start: Word,
}

impl<'a> Builder<'a> {
    fn new(relations: &'a [(Word, Word)], start: Word) -> Self {
        Builder {
            relations,
            word: start.letters().to_vec(),
            steps: Vec::new(),
            start,
        }
    }

    fn rewrite(&mut self, relation: usize, at: usize, forward: bool) {
        let (lhs, rhs) = &self.relations[relation];
        let (from, to) = if forward { (lhs, rhs) } else { (rhs, lhs) };
        self.word.splice(at..at + from.len(), to.letters().iter().copied());
        self.steps.push(Step::Rewrite { relation, at, forward });
    }

    fn insert(&mut self, at: usize, letter: Letter) {
        self.word.splice(at..at, [letter, letter.inverse()]);
        self.steps.push(Step::Insert { at, letter });
    }

    fn reduce(&mut self) {
        self.word = Word::from(std::mem::take(&mut self.word)).free_reduce().into_letters();
        self.steps.push(Step::FreeReduce);
    }

    fn finish(self) -> Derivation {
        Derivation {
            start: self.start,
            end: Word::from(self.word),
            steps: self.steps,
        }
    }
}

/// Two relation sets on `x1..xn` (0-based generators) with `d = x1 ... xm`
/// (indices mod n):
/// * `conjugation`: `x_i d = d x_{i+m}` for `1 <= i <= n`;
/// * `chain`: `d = x_j x_{j+1} ... x_{j+m-1}` for `2 <= j <= n`.
pub struct RelationEquivalence {
    pub n: usize,
    pub m: usize,
    pub conjugation: Vec<(Word, Word)>,
    pub chain: Vec<(Word, Word)>,
}

impl RelationEquivalence {
    pub fn new(n: usize, m: usize) -> Self {
        let d = crate::presentations::cyclic_product(0, m, n);
        let conjugation = (0..n)
            .map(|i| (Word::gen(i).concat(&d), d.concat(&Word::gen((i + m) % n))))
            .collect();
        let chain = (1..n)
            .map(|j| (d.clone(), crate::presentations::cyclic_product(j, m, n)))
            .collect();
        RelationEquivalence {
            n,
            m,
            conjugation,
            chain,
        }
    }

    /// Derivations of each chain relation `d -> x_j ... x_{j+m-1}` from the
    /// conjugation relations, with earlier chain relations appended to the
    /// relation list as proved lemmas. Relation indices: `0..n` are the
    /// conjugation relations, `n + (j - 2)` the chain relation for `j`.
    pub fn chain_from_conjugation(&self) -> Vec<Derivation> {
        let mut relations = self.conjugation.clone();
        let mut out = Vec::new();
        let m = self.m;
        for j in 2..=self.n {
            let d = &self.chain[j - 2].0;
            // d -> x_{j-1}^-1 x_{j-1} d -> x_{j-1}^-1 d x_{j-1+m}
            //   -> x_{j-1}^-1 x_{j-1} ... x_{j+m-2} x_{j-1+m} -> x_j ... x_{j+m-1}
            let prev = j - 2; // generator x_{j-1}, 0-based
            let mut b = Builder::new(&relations, d.clone());
            b.insert(0, Letter::new(prev, true));
            b.rewrite(prev, 1, true);
            if j > 2 {
                b.rewrite(self.n + j - 3, 1, true);
            }
            b.reduce();
            let der = b.finish();
            debug_assert_eq!(der.end, self.chain[j - 2].1);
            let _ = m;
            out.push(der);
            relations.push(self.chain[j - 2].clone());
        }
        out
    }

    /// Derivations of each conjugation relation `x_i d -> d x_{i+m}` from the
    /// chain relations (indices `0..n-1` for `j = 2..n`).
    pub fn conjugation_from_chain(&self) -> Vec<Derivation> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let start = self.conjugation[i].0.clone();
                let mut b = Builder::new(&self.chain, start);
                // x_i d -> x_i x_{i+1} ... x_{i+m}
                let next = (i + 1) % n;
                if next != 0 {
                    b.rewrite(next - 1, 1, true);
                }
                // x_i ... x_{i+m-1} -> d
                if i != 0 {
                    b.rewrite(i - 1, 0, false);
                }
                b.finish()
            })
            .collect()
    }

    pub fn relations_for_chain_proof(&self) -> Vec<(Word, Word)> {
        let mut r = self.conjugation.clone();
        r.extend(self.chain.iter().cloned());
        r
    }

    /// Checks both directions; returns the number of verified derivations.
    pub fn verify(&self) -> Result<usize, DerivationError> {
        let forward = self.chain_from_conjugation();
        let lemmas = self.relations_for_chain_proof();
        for (k, der) in forward.iter().enumerate() {
            // only lemmas proved before this one may be used
            der.check(&lemmas[..self.n + k])?;
            if der.end != self.chain[k].1 {
                return Err(DerivationError::WrongEnd {
                    found: der.end.clone(),
                    expected: self.chain[k].1.clone(),
                });
            }
        }
        let backward = self.conjugation_from_chain();
        for (i, der) in backward.iter().enumerate() {
            der.check(&self.chain)?;
            if der.end != self.conjugation[i].1 {
                return Err(DerivationError::WrongEnd {
                    found: der.end.clone(),
                    expected: self.conjugation[i].1.clone(),
                });
            }
        }
        Ok(forward.len() + backward.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::{todd_coxeter, EnumOptions};

    #[test]
    fn cyclic_transversal() {
        let p = Presentation::from_texts(&["x"], &["x^3"]).unwrap();
        let ct = todd_coxeter(&p, &[], EnumOptions::default()).unwrap();
        let tr = schreier_transversal(&ct, ColumnOrder::Custom(vec![0])).unwrap();
        let a = &p.alphabet;
        let mut reps: Vec<String> = tr.reps.iter().map(|w| a.render(w)).collect();
        reps.sort();
        assert_eq!(reps, ["1", "x", "x^2"]);
        assert!(tr.is_schreier(&ct));
    }

    #[test]
    fn index_one_subgroup() {
        let p = Presentation::from_texts(&["a", "b"], &["a^2", "b^3", "a b a^-1 b^-1"]).unwrap();
        let gens = vec![Word::gen(0), Word::gen(1)];
        let ct = todd_coxeter(&p, &gens, EnumOptions::default()).unwrap();
        assert_eq!(ct.rows(), 1);
        let tr = schreier_transversal(&ct, ColumnOrder::Natural).unwrap();
        let rs = rs_presentation(&p, &ct, &tr).unwrap();
        assert_eq!(
            rs.presentation.serialize(),
            "gens: a_0 b_0\nrel: a_0^2\nrel: b_0^3\nrel: a_0 b_0 a_0^-1 b_0^-1\n"
        );
    }

    #[test]
    fn closed_forms_small() {
        let a = Alphabet::numbered("s", 0, 3);
        let s = closed_form_generator(3, 4, GenKind::S, 0, 2).unwrap();
        assert_eq!(a.render(&s), "s0 s2 s0^-1");
        let u = closed_form_generator(3, 4, GenKind::U, 0, 2).unwrap();
        assert_eq!(a.render(&u), "s0 s2^-1");
        let top = closed_form_generator(3, 4, GenKind::S, 3, 1).unwrap();
        // s0 s1 s2 s0 s1 s0^-1 s2^-1 s1^-1 s0^-1 with s_{p+l} = s_{4 mod 3}
        assert_eq!(a.render(&top), "s0 s1 s2 s0 s1 s0^-1 s2^-1 s1^-1 s0^-1");
        assert!(closed_form_generator(3, 4, GenKind::U, 0, 3).is_err());
        assert!(closed_form_generator(3, 4, GenKind::S, 4, 1).is_err());
    }

    #[test]
    fn relation_equivalence() {
        for (n, m) in [(2, 3), (3, 4), (3, 5), (2, 5), (4, 5), (5, 3)] {
            let eq = RelationEquivalence::new(n, m);
            assert_eq!(eq.verify().unwrap(), 2 * n - 1, "({n},{m})");
        }
    }

    #[test]
    fn derivation_rejects_bad_steps() {
        let rel = vec![(Word::gen(0), Word::gen(1))];
        let bad = Derivation {
            start: Word::gen(1),
            end: Word::gen(1),
            steps: vec![Step::Rewrite {
                relation: 0,
                at: 0,
                forward: true,
            }],
        };
        assert!(matches!(bad.check(&rel), Err(DerivationError::NoMatch { .. })));
    }
}
