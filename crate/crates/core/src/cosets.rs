//! Todd–Coxeter coset enumeration and the finite-group tools built on it.

use std::collections::VecDeque;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentations::Presentation;
use crate::words::{Letter, Word};

const NONE: u32 = u32::MAX;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Relator-driven definitions with a lookahead pass when the table fills.
    Hlt,
    /// Definitions in row order; every deduction is scanned immediately.
    Felsch,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_cosets: DEFAULT_MAX_COSETS,
            strategy: Strategy::Hlt,
        }
    }
}

impl EnumOptions {
    pub fn bounded(max_cosets: usize) -> Self {
        EnumOptions {
            max_cosets,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum EnumStatus {
    Complete,
    Overflow { bound: usize },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset table is incomplete (overflow at {bound} cosets)")]
    Incomplete { bound: usize },
    #[error("subgroup generator uses generator {index} outside alphabet of size {size}")]
    ForeignGenerator { index: usize, size: usize },
}

/// Action of a group on the right cosets of a subgroup. Coset 0 is the
/// subgroup itself; rows are numbered in breadth-first order over the
/// columns `x1, x1^-1, x2, ...`. An overflowed enumeration has no rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: usize,
    table: Vec<u32>,
    status: EnumStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == EnumStatus::Complete
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn gen_count(&self) -> usize {
        self.ngens
    }

    pub fn columns(&self) -> usize {
        2 * self.ngens
    }

    pub fn act_letter(&self, coset: usize, l: Letter) -> usize {
        self.table[coset * 2 * self.ngens + l.column()] as usize
    }

    pub fn act(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act_letter(c, l))
    }

    pub fn require_complete(&self) -> Result<(), CosetError> {
        match self.status {
            EnumStatus::Complete => Ok(()),
            EnumStatus::Overflow { bound } => Err(CosetError::Incomplete { bound }),
        }
    }

    /// Breadth-first spanning tree from coset 0, exploring columns in the
    /// given order (all columns when `cols` is the natural order). Returns,
    /// per coset, its parent coset and the letter on the tree edge.
    pub fn bfs_tree(&self, cols: &[usize]) -> Vec<Option<(usize, Letter)>> {
        let mut parent = vec![None; self.rows];
        let mut seen = vec![false; self.rows];
        let mut queue = VecDeque::from([0usize]);
        if self.rows > 0 {
            seen[0] = true;
        }
        while let Some(c) = queue.pop_front() {
            for &col in cols {
                let l = Letter::from_column(col);
                let d = self.act_letter(c, l);
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = Some((c, l));
                    queue.push_back(d);
                }
            }
        }
        parent
    }

    /// Representative words along [`CosetTable::bfs_tree`].
    pub fn representatives(&self, cols: &[usize]) -> Vec<Word> {
        let tree = self.bfs_tree(cols);
        let mut reps: Vec<Option<Word>> = vec![None; self.rows];
        fn build(c: usize, tree: &[Option<(usize, Letter)>], reps: &mut [Option<Word>]) -> Word {
            if let Some(w) = &reps[c] {
                return w.clone();
            }
            let w = match tree[c] {
                None => Word::identity(),
                Some((p, l)) => {
                    let mut v = build(p, tree, reps).into_letters();
                    v.push(l);
                    Word::from(v)
                }
            };
            reps[c] = Some(w.clone());
            w
        }
        (0..self.rows).map(|c| build(c, &tree, &mut reps)).collect()
    }

    pub fn natural_columns(&self) -> Vec<usize> {
        (0..self.columns()).collect()
    }

    /// Every relator fixes every coset and every column is a permutation.
    pub fn check_consistency(&self, relators: &[Word]) -> bool {
        if !self.is_complete() {
            return false;
        }
        for c in 0..self.rows {
            for col in 0..self.columns() {
                let l = Letter::from_column(col);
                let d = self.act_letter(c, l);
                if d >= self.rows || self.act_letter(d, l.inverse()) != c {
                    return false;
                }
            }
            if relators.iter().any(|r| self.act(c, r) != c) {
                return false;
            }
        }
        true
    }
}

struct Enumerator<'a> {
    ngens: usize,
    cols: usize,
    bound: usize,
    capacity: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    relators: &'a [Word],
    subgens: &'a [Word],
    /// Cyclic conjugates of relators and their inverses, grouped by first column.
    conjugates: Vec<Vec<Vec<Letter>>>,
    felsch: bool,
    deductions: Vec<(u32, usize)>,
    merge_queue: VecDeque<u32>,
    merges: usize,
    cursor: u32,
    subgens_done: bool,
}

enum Stop {
    /// The coset bound was reached.
    Overflow,
    /// Row storage is full of dead rows; compact and resume.
    Full,
}

impl<'a> Enumerator<'a> {
    fn new(ngens: usize, relators: &'a [Word], subgens: &'a [Word], opts: EnumOptions) -> Self {
        let cols = 2 * ngens;
        let felsch = opts.strategy == Strategy::Felsch;
        let mut conjugates = vec![Vec::new(); cols];
        if felsch {
            let mut seen = std::collections::HashSet::new();
            for r in relators {
                for w in [r.clone(), r.inverse()] {
                    for k in 0..w.len() {
                        let rot = w.rotate(k);
                        if seen.insert(rot.clone()) {
                            conjugates[rot[0].column()].push(rot.into_letters());
                        }
                    }
                }
            }
        }
        let bound = opts.max_cosets.max(1);
        let mut e = Enumerator {
            ngens,
            cols,
            bound,
            capacity: bound.saturating_mul(2).max(16),
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            relators,
            subgens,
            conjugates,
            felsch,
            deductions: Vec::new(),
            merge_queue: VecDeque::new(),
            merges: 0,
            cursor: 0,
            subgens_done: false,
        };
        e.push_row();
        e
    }

    fn push_row(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.parent.push(id);
        self.live += 1;
        id
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, d: u32) {
        self.table[c as usize * self.cols + col] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn deduce(&mut self, c: u32, col: usize, d: u32) {
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        if self.felsch {
            self.deductions.push((c, col));
        }
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, Stop> {
        if self.live >= self.bound {
            if !self.felsch {
                self.lookahead();
            }
            if self.live >= self.bound {
                return Err(Stop::Overflow);
            }
        }
        if self.parent.len() >= self.capacity {
            return Err(Stop::Full);
        }
        let d = self.push_row();
        self.deduce(c, col, d);
        Ok(d)
    }

    /// Traces `w` from both ends of `c`, defining new cosets to close gaps.
    fn scan_and_fill(&mut self, c: u32, w: &[Letter]) -> Result<(), Stop> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize].column()) != NONE {
                f = self.get(f, w[i as usize].column());
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j as usize].column() ^ 1) != NONE {
                b = self.get(b, w[j as usize].column() ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.deduce(f, w[i as usize].column(), b);
                return Ok(());
            }
            let merges = self.merges;
            self.define(f, w[i as usize].column())?;
            if self.merges != merges {
                // a lookahead collapsed cosets under us; the verify pass
                // rescans anything left unfinished
                return Ok(());
            }
        }
    }

    /// Like `scan_and_fill` but only records a deduction when exactly one
    /// entry is missing.
    fn scan(&mut self, c: u32, w: &[Letter]) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        while (i as isize) <= j && self.get(f, w[i].column()) != NONE {
            f = self.get(f, w[i].column());
            i += 1;
        }
        if i as isize > j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j >= i as isize && self.get(b, w[j as usize].column() ^ 1) != NONE {
            b = self.get(b, w[j as usize].column() ^ 1);
            j -= 1;
        }
        if j < i as isize {
            self.coincidence(f, b);
        } else if j == i as isize {
            self.deduce(f, w[i].column(), b);
        }
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.merges += 1;
        self.merge_queue.push_back(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.merge_queue.pop_front() {
            for col in 0..self.cols {
                let f = self.get(e, col);
                if f == NONE {
                    continue;
                }
                if self.get(f, col ^ 1) == e {
                    self.set(f, col ^ 1, NONE);
                }
                let e1 = self.find(e);
                let f1 = self.find(f);
                let x = self.get(e1, col);
                if x != NONE {
                    self.merge(f1, x);
                } else {
                    let y = self.get(f1, col ^ 1);
                    if y != NONE {
                        self.merge(e1, y);
                    } else {
                        self.deduce(e1, col, f1);
                    }
                }
            }
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, col);
            for idx in 0..self.conjugates[col].len() {
                if !self.is_live(c) {
                    break;
                }
                let w = std::mem::take(&mut self.conjugates[col][idx]);
                self.scan(c, &w);
                self.conjugates[col][idx] = w;
            }
            if d == NONE || !self.is_live(d) {
                continue;
            }
            for idx in 0..self.conjugates[col ^ 1].len() {
                if !self.is_live(d) {
                    break;
                }
                let w = std::mem::take(&mut self.conjugates[col ^ 1][idx]);
                self.scan(d, &w);
                self.conjugates[col ^ 1][idx] = w;
            }
        }
    }

    /// Scans every relator at every live coset without defining anything.
    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.parent.len() as u32 {
            for r in self.relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r.letters());
            }
            c += 1;
        }
    }

    /// Renumbers live cosets to be contiguous, preserving order. Only valid
    /// when no coincidences are pending.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.parent.len();
        let mut map = vec![NONE; n];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..n {
            if map[c] == NONE {
                continue;
            }
            for col in 0..self.cols {
                let d = self.table[c * self.cols + col];
                table.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.deductions.clear();
        map
    }

    fn run(&mut self) -> Result<(), Stop> {
        loop {
            match self.advance() {
                Err(Stop::Full) => {
                    let map = self.compact();
                    let old = self.cursor as usize;
                    self.cursor = map[..old].iter().filter(|&&m| m != NONE).count() as u32;
                    if self.parent.len() >= self.capacity {
                        return Err(Stop::Overflow);
                    }
                }
                other => return other,
            }
        }
    }

    fn advance(&mut self) -> Result<(), Stop> {
        if !self.subgens_done {
            for h in self.subgens {
                self.scan_and_fill(0, h.letters())?;
                self.process_deductions();
            }
            self.subgens_done = true;
        }
        loop {
            while (self.cursor as usize) < self.parent.len() {
                let c = self.cursor;
                if self.is_live(c) {
                    if self.felsch {
                        self.felsch_row(c)?;
                    } else {
                        self.hlt_row(c)?;
                    }
                }
                self.cursor += 1;
            }
            if self.verify()? {
                return Ok(());
            }
            self.cursor = 0;
        }
    }

    fn hlt_row(&mut self, c: u32) -> Result<(), Stop> {
        for r in self.relators {
            if !self.is_live(c) {
                return Ok(());
            }
            self.scan_and_fill(c, r.letters())?;
        }
        for col in 0..self.cols {
            if !self.is_live(c) {
                return Ok(());
            }
            if self.get(c, col) == NONE {
                self.define(c, col)?;
            }
        }
        Ok(())
    }

    fn felsch_row(&mut self, c: u32) -> Result<(), Stop> {
        for col in 0..self.cols {
            if !self.is_live(c) {
                return Ok(());
            }
            if self.get(c, col) == NONE {
                self.define(c, col)?;
                self.process_deductions();
            }
        }
        Ok(())
    }

    /// Checks that the table is closed; fills and rescans anything that is
    /// not, returning whether it was already closed.
    fn verify(&mut self) -> Result<bool, Stop> {
        let mut ok = true;
        for h in self.subgens {
            if self.trace(0, h.letters()) != Some(0) {
                ok = false;
                self.scan_and_fill(0, h.letters())?;
            }
        }
        let mut c = 0u32;
        while (c as usize) < self.parent.len() {
            if self.is_live(c) {
                for col in 0..self.cols {
                    if self.get(c, col) == NONE {
                        return Ok(false);
                    }
                }
                for r in self.relators {
                    if self.is_live(c) && self.trace(c, r.letters()) != Some(c) {
                        ok = false;
                        self.scan_and_fill(c, r.letters())?;
                    }
                }
            }
            c += 1;
        }
        self.process_deductions();
        Ok(ok)
    }

    fn trace(&self, c: u32, w: &[Letter]) -> Option<u32> {
        let mut x = c;
        for l in w {
            x = self.get(x, l.column());
            if x == NONE {
                return None;
            }
        }
        Some(x)
    }

    /// Live rows renumbered breadth-first from coset 0 in column order.
    fn standardize(mut self) -> CosetTable {
        self.compact();
        let n = self.parent.len();
        let cols = self.cols;
        let mut order = Vec::with_capacity(n);
        let mut map = vec![NONE; n];
        map[0] = 0;
        order.push(0usize);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for col in 0..cols {
                let d = self.table[c * cols + col] as usize;
                if map[d] == NONE {
                    map[d] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut table = Vec::with_capacity(n * cols);
        for &c in &order {
            for col in 0..cols {
                table.push(map[self.table[c * cols + col] as usize]);
            }
        }
        CosetTable {
            ngens: self.ngens,
            rows: order.len(),
            table,
            status: EnumStatus::Complete,
        }
    }
}

/// Enumerates the right cosets of the subgroup generated by `subgens` (not
/// its normal closure).
pub fn todd_coxeter(p: &Presentation, subgens: &[Word], opts: EnumOptions) -> Result<CosetTable, CosetError> {
    let ngens = p.gen_count();
    for h in subgens {
        if let Some(g) = h.max_gen().filter(|&g| g >= ngens) {
            return Err(CosetError::ForeignGenerator { index: g, size: ngens });
        }
    }
    let relators: Vec<Word> = p
        .relators
        .iter()
        .map(|r| r.cyclic_reduce())
        .filter(|r| !r.is_empty())
        .collect();
    let subgens: Vec<Word> = subgens.iter().map(|h| h.free_reduce()).collect();
    let mut e = Enumerator::new(ngens, &relators, &subgens, opts);
    if ngens == 0 {
        return Ok(CosetTable {
            ngens,
            rows: 1,
            table: Vec::new(),
            status: EnumStatus::Complete,
        });
    }
    match e.run() {
        Ok(()) => Ok(e.standardize()),
        Err(_) => Ok(CosetTable {
            ngens,
            rows: 0,
            table: Vec::new(),
            status: EnumStatus::Overflow { bound: opts.max_cosets },
        }),
    }
}

/// Order of the presented group, or `None` when enumeration overflows.
pub fn group_order(p: &Presentation, opts: EnumOptions) -> Option<usize> {
    let t = todd_coxeter(p, &[], opts).ok()?;
    t.is_complete().then(|| t.rows())
}

/// Result of closing a subgroup under conjugation.
#[derive(Debug, Clone)]
pub struct NormalClosure {
    pub generators: Vec<Word>,
    pub table: CosetTable,
}

/// Enumerates the normal closure of `seeds`: a subgroup is normal exactly
/// when each of its generators fixes every coset, so violated conjugates
/// `rep(c) h rep(c)^-1` are added until none remain.
pub fn normal_closure(
    p: &Presentation,
    seeds: &[Word],
    opts: EnumOptions,
    max_rounds: usize,
) -> Result<NormalClosure, CosetError> {
    let mut gens: Vec<Word> = seeds.iter().map(|w| w.free_reduce()).collect();
    for _ in 0..=max_rounds {
        let table = todd_coxeter(p, &gens, opts)?;
        table.require_complete()?;
        let reps = table.representatives(&table.natural_columns());
        let mut added = Vec::new();
        for (c, rep) in reps.iter().enumerate() {
            for h in &gens {
                if table.act(c, h) != c {
                    let conj = rep.concat(h).concat(&rep.inverse()).free_reduce();
                    if !added.contains(&conj) {
                        added.push(conj);
                    }
                }
            }
        }
        if added.is_empty() {
            return Ok(NormalClosure {
                generators: gens,
                table,
            });
        }
        gens.extend(added);
    }
    Err(CosetError::Incomplete { bound: opts.max_cosets })
}

/// A finite group as its regular right action, with breadth-first
/// representative words. Products are computed by tracing representatives
/// rather than stored as a full square table.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    table: CosetTable,
    reps: Vec<Word>,
    /// `left[col][g]` is the element `letter(col) * g`.
    left: Vec<Vec<u32>>,
}

impl CayleyTable {
    /// Requires a complete table over the trivial subgroup.
    pub fn new(table: CosetTable) -> Result<Self, CosetError> {
        table.require_complete()?;
        let reps = table.representatives(&table.natural_columns());
        let left = (0..table.columns())
            .map(|col| {
                let start = table.act_letter(0, Letter::from_column(col));
                reps.iter().map(|r| table.act(start, r) as u32).collect()
            })
            .collect();
        Ok(CayleyTable { table, reps, left })
    }

    pub fn from_presentation(p: &Presentation, opts: EnumOptions) -> Result<Self, CosetError> {
        Self::new(todd_coxeter(p, &[], opts)?)
    }

    pub fn order(&self) -> usize {
        self.table.rows()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn gen_count(&self) -> usize {
        self.table.gen_count()
    }

    pub fn coset_table(&self) -> &CosetTable {
        &self.table
    }

    pub fn representative(&self, g: usize) -> &Word {
        &self.reps[g]
    }

    pub fn element(&self, w: &Word) -> usize {
        self.table.act(0, w)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.act(a, &self.reps[b])
    }

    /// `a * w` for a word `w`.
    pub fn mul_word(&self, a: usize, w: &Word) -> usize {
        self.table.act(a, w)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table.act(0, &self.reps[a].inverse())
    }

    pub fn left_letter(&self, l: Letter, g: usize) -> usize {
        self.left[l.column()][g] as usize
    }

    /// `x^-1 g x` for a generator letter `x`.
    pub fn conjugate_by_letter(&self, g: usize, x: Letter) -> usize {
        self.table.act_letter(self.left_letter(x.inverse(), g), x)
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(self.inverse(by), g), by)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn word_order(&self, w: &Word) -> usize {
        self.element_order(self.element(w))
    }

    /// Conjugacy class id of every element; ids are numbered by least member.
    pub fn conjugacy_classes(&self) -> Vec<usize> {
        let n = self.order();
        let mut class = vec![usize::MAX; n];
        let mut next = 0;
        for g in 0..n {
            if class[g] != usize::MAX {
                continue;
            }
            class[g] = next;
            let mut stack = vec![g];
            while let Some(x) = stack.pop() {
                for col in 0..self.table.columns() {
                    let y = self.conjugate_by_letter(x, Letter::from_column(col));
                    if class[y] == usize::MAX {
                        class[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        class
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Whether `g` commutes with every generator.
    pub fn is_central(&self, g: usize) -> bool {
        (0..self.table.columns()).all(|col| self.conjugate_by_letter(g, Letter::from_column(col)) == g)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.is_central(g)).collect()
    }

    /// Cyclic subgroup generated by `g`.
    pub fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Number of conjugacy classes meeting the set of nontrivial powers of
    /// the given generators.
    pub fn reflection_class_count(&self, gens: &[usize]) -> usize {
        let class = self.conjugacy_classes();
        let mut hit = std::collections::BTreeSet::new();
        for &g in gens {
            for x in self.powers(self.element(&Word::gen(g))) {
                if x != 0 {
                    hit.insert(class[x]);
                }
            }
        }
        hit.len()
    }

    /// Subgroup generated by the given elements, as a sorted element list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut out = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Identity, inverses, and associativity on `samples` random triples.
    pub fn verify_axioms<R: Rng>(&self, samples: usize, rng: &mut R) -> bool {
        let n = self.order();
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a {
                return false;
            }
            let inv = self.inverse(a);
            if self.mul(a, inv) != 0 || self.mul(inv, a) != 0 {
                return false;
            }
        }
        (0..samples).all(|_| {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}
