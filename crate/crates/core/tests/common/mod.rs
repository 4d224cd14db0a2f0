//! Oracles and checks shared by the integration tests. The oracles (naive
//! enumeration, floating-point Tits representation, monoid class search) do
//! not call into the enumeration, normal-form or root code of the library.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use toric_core::cosets::{todd_coxeter, CayleyTable, EnumOptions};
use toric_core::presentations::Presentation;
use toric_core::schreier::{closed_form_generator, closed_form_label, derive_toric, GenKind};
use toric_core::words::{Alphabet, GenMap, Word};

/// Textbook HLT coset enumeration over the trivial subgroup, with
/// union-find coincidence handling. Returns the group order, or `None` once
/// more than `limit` cosets have been defined.
pub fn naive_order(p: &Presentation, limit: usize) -> Option<usize> {
    NaiveTable::enumerate(p, limit).map(|mut t| t.live().len())
}

pub struct NaiveTable {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
}

fn col(l: toric_core::words::Letter) -> usize {
    2 * l.gen() + usize::from(l.is_inverse())
}

impl NaiveTable {
    pub fn enumerate(p: &Presentation, limit: usize) -> Option<Self> {
        let cols = 2 * p.gen_count();
        let mut t = NaiveTable {
            cols,
            table: vec![vec![None; cols]],
            parent: vec![0],
        };
        let rels: Vec<Vec<usize>> = p
            .relators
            .iter()
            .map(|r| r.letters().iter().map(|&l| col(l)).collect())
            .collect();
        let mut c = 0;
        while c < t.table.len() {
            if t.find(c) == c {
                for r in &rels {
                    if t.find(c) != c {
                        break;
                    }
                    t.scan_and_fill(c, r, limit)?;
                }
                if t.find(c) == c {
                    for x in 0..cols {
                        if t.table[c][x].is_none() {
                            t.define(c, x, limit)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Some(t)
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            self.parent[c] = self.parent[self.parent[c]];
            c = self.parent[c];
        }
        c
    }

    fn define(&mut self, c: usize, x: usize, limit: usize) -> Option<usize> {
        if self.table.len() >= limit {
            return None;
        }
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][x ^ 1] = Some(c);
        Some(d)
    }

    fn get(&mut self, c: usize, x: usize) -> Option<usize> {
        let d = self.table[c][x]?;
        Some(self.find(d))
    }

    fn scan_and_fill(&mut self, c: usize, r: &[usize], limit: usize) -> Option<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0, r.len());
        loop {
            while i < j {
                match self.get(f, r[i]) {
                    Some(d) => {
                        f = d;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i >= j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j > i {
                match self.get(b, r[j - 1] ^ 1) {
                    Some(d) => {
                        b = d;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j <= i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            if j == i + 1 {
                self.table[f][r[i]] = Some(b);
                self.table[b][r[i] ^ 1] = Some(f);
                return Some(());
            }
            self.define(f, r[i], limit)?;
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::from([(a, b)]);
        while let Some((a, b)) = queue.pop_front() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
            for x in 0..self.cols {
                if let Some(d) = self.table[drop][x] {
                    let d = self.find(d);
                    match self.table[keep][x] {
                        Some(e) => queue.push_back((e, d)),
                        None => self.table[keep][x] = Some(d),
                    }
                    if self.table[d][x ^ 1].is_none() {
                        self.table[d][x ^ 1] = Some(keep);
                    }
                }
            }
        }
    }

    pub fn live(&mut self) -> Vec<usize> {
        (0..self.table.len()).filter(|&c| self.find(c) == c).collect()
    }

    /// Coset reached from the subgroup by `w`.
    pub fn act(&mut self, w: &Word) -> usize {
        let mut c = 0;
        for &l in w.letters() {
            c = self.get(c, col(l)).expect("complete table");
        }
        self.find(c)
    }
}

/// Geometric representation of a rank-3 Coxeter group in floating point.
/// A label of 0 means infinity.
pub struct TitsRep {
    gens: [[[f64; 3]; 3]; 3],
}

pub type Mat3 = [[f64; 3]; 3];

fn mul3(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

pub const IDENTITY3: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

impl TitsRep {
    /// `m(r1,r2) = k`, `m(r2,r3) = n`, `m(r3,r1) = m`.
    pub fn triangle(k: u32, n: u32, m: u32) -> Self {
        let label = |i: usize, j: usize| -> u32 {
            match (i.min(j), i.max(j)) {
                (0, 1) => k,
                (1, 2) => n,
                _ => m,
            }
        };
        let b = |i: usize, j: usize| -> f64 {
            if i == j {
                1.0
            } else {
                match label(i, j) {
                    0 => -1.0,
                    l => -(std::f64::consts::PI / l as f64).cos(),
                }
            }
        };
        let mut gens = [[[0.0; 3]; 3]; 3];
        for (s, g) in gens.iter_mut().enumerate() {
            // column j is the image of alpha_j
            *g = IDENTITY3;
            for (j, x) in g[s].iter_mut().enumerate() {
                *x -= 2.0 * b(s, j);
            }
        }
        TitsRep { gens }
    }

    pub fn eval(&self, w: &Word) -> Mat3 {
        w.letters()
            .iter()
            .fold(IDENTITY3, |acc, l| mul3(&acc, &self.gens[l.gen()]))
    }

    pub fn same(a: &Mat3, b: &Mat3) -> bool {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .all(|(x, y)| (x - y).abs() < 1e-7)
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        Self::same(&self.eval(w), &IDENTITY3)
    }
}

/// Equality of positive words in the monoid `<x, y | x^n = y^m>+`, by
/// exploring the whole class of one word under the defining relation.
/// Words are bytes `0` (x) and `1` (y).
pub fn monoid_class(n: usize, m: usize, w: &[u8]) -> HashSet<Vec<u8>> {
    let xs = vec![0u8; n];
    let ys = vec![1u8; m];
    let mut seen = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for (from, to) in [(&xs, &ys), (&ys, &xs)] {
            if v.len() < from.len() {
                continue;
            }
            for i in 0..=v.len() - from.len() {
                if &v[i..i + from.len()] == from.as_slice() {
                    let mut u = v[..i].to_vec();
                    u.extend_from_slice(to);
                    u.extend_from_slice(&v[i + from.len()..]);
                    if seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    seen
}

pub fn bytes_to_word(w: &[u8]) -> Word {
    Word::product_of(w.iter().map(|&b| b as usize))
}

/// Cyclic word with every inverse sign dropped, canonical up to rotation and
/// reversal. Two relators of a group generated by involutions that agree
/// here define the same relation.
pub fn involutive_cyclic_form(w: &Word) -> Vec<usize> {
    let gens: Vec<usize> = w.letters().iter().map(|l| l.gen()).collect();
    let mut best: Option<Vec<usize>> = None;
    for seq in [gens.clone(), gens.iter().rev().copied().collect()] {
        for k in 0..seq.len().max(1) {
            let rot: Vec<usize> = seq[k..].iter().chain(&seq[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Finite toric rows with their group orders.
pub const FINITE_ROWS: [(u32, u32, u32); 10] = [
    (2, 3, 4),
    (2, 3, 5),
    (3, 2, 3),
    (4, 2, 3),
    (5, 2, 3),
    (3, 2, 5),
    (2, 2, 3),
    (2, 2, 5),
    (2, 2, 7),
    (2, 2, 9),
];

/// Closed forms and the generic rewriting, compared as elements of the
/// finite parent group.
pub fn closed_form_mismatches(k: u32, n: u32, m: u32) -> (usize, usize) {
    let d = derive_toric(k, n, m, EnumOptions::default(), 100_000).unwrap();
    let parent = CayleyTable::new(todd_coxeter(&d.parent, &[], EnumOptions::default()).unwrap()).unwrap();
    let (nu, mu) = (n as usize, m as usize);
    let value = |name: &str| -> Word {
        match d.rs.index_of(name) {
            Some(g) => d.rs.generators[g].value.clone(),
            None => Word::identity(),
        }
    };
    let s_values: Vec<Word> = (0..nu).map(|j| value(&format!("s_0_{j}"))).collect();
    let to_parent = GenMap::new(Alphabet::numbered("s", 0, nu), d.parent.alphabet.clone(), s_values).unwrap();
    let (mut checked, mut mismatches) = (0, 0);
    for which in [GenKind::S, GenKind::U] {
        let p_max = if which == GenKind::S { nu } else { nu - 1 };
        for l in 0..mu {
            for p in 1..=p_max {
                let closed = closed_form_generator(nu, mu, which, l, p).unwrap();
                let (i, j) = closed_form_label(mu, which, l, p);
                let prefix = if which == GenKind::S { "s" } else { "u" };
                let generic = value(&format!("{prefix}_{i}_{j}"));
                checked += 1;
                if parent.element(&to_parent.apply(&closed).unwrap()) != parent.element(&generic) {
                    mismatches += 1;
                }
            }
        }
    }
    (checked, mismatches)
}
