//! Coxeter systems: exact root arithmetic, the minimal-root automaton, and
//! ShortLex normal forms, plus structure queries for triangle groups.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;

use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cosets::{CayleyTable, EnumOptions};
use crate::cyclotomic::{Cyc, CycError};
use crate::presentations::{build, FamilyParams};
use crate::words::{Alphabet, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    Matrix(String),
    #[error(transparent)]
    Sign(#[from] CycError),
    #[error("minimal root table exceeded {0} roots")]
    TooManyRoots(usize),
    #[error("generator {index} outside rank {rank}")]
    Generator { index: usize, rank: usize },
    #[error("group is infinite; brute-force check out of scope")]
    Infinite,
    #[error("enumeration failed: {0}")]
    Enumeration(String),
}

/// Symmetric matrix of labels; `None` is infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    labels: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    pub fn new(labels: Vec<Vec<Option<u32>>>) -> Result<Self, CoxeterError> {
        let r = labels.len();
        for (i, row) in labels.iter().enumerate() {
            if row.len() != r {
                return Err(CoxeterError::Matrix("not square".into()));
            }
            if row[i] != Some(1) {
                return Err(CoxeterError::Matrix(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..r {
                if labels[j][i] != row[j] {
                    return Err(CoxeterError::Matrix(format!("entries ({i},{j}) not symmetric")));
                }
                if i != j && row[j].is_some_and(|l| l < 2) {
                    return Err(CoxeterError::Matrix(format!("label ({i},{j}) below 2")));
                }
            }
        }
        Ok(CoxeterMatrix { labels })
    }

    /// Labels `m(r1,r2) = k`, `m(r2,r3) = n`, `m(r3,r1) = m`; 0 stands for
    /// infinity.
    pub fn triangle(k: u32, n: u32, m: u32) -> Result<Self, CoxeterError> {
        let f = |x: u32| (x != 0).then_some(x);
        CoxeterMatrix::new(vec![
            vec![f(1), f(k), f(m)],
            vec![f(k), f(1), f(n)],
            vec![f(m), f(n), f(1)],
        ])
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize, j: usize) -> Option<u32> {
        self.labels[i][j]
    }

    /// Smallest `N` such that `Q(ζ_N)` contains every `cos(π/label)`.
    pub fn modulus(&self) -> u64 {
        self.labels
            .iter()
            .flatten()
            .flatten()
            .fold(2u64, |acc, &l| acc.lcm(&(2 * l as u64)))
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::numbered("r", 1, self.rank())
    }

    /// `2 B(α_i, α_j) = -2 cos(π / m(i,j))`, and `-2` for infinite labels.
    pub fn gram2(&self, i: usize, j: usize) -> Cyc {
        let n = self.modulus();
        match self.labels[i][j] {
            Some(1) => Cyc::from_int(n, 2),
            Some(l) => (-&Cyc::two_cos(2 * l as u64, 1)).embed(n),
            None => Cyc::from_int(n, -2),
        }
    }

    pub fn submatrix(&self, subset: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            labels: subset
                .iter()
                .map(|&i| subset.iter().map(|&j| self.labels[i][j]).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootAction {
    /// The simple root is sent to its negative.
    Negative,
    /// The image dominates the simple root, so it is not minimal.
    Elevated,
    Root(usize),
}

type RootKey = Vec<BigRational>;

fn key(coords: &[Cyc]) -> RootKey {
    coords.iter().flat_map(|c| c.coeffs().iter().cloned()).collect()
}

/// Interned roots with memoized reflections.
struct RootStore {
    coords: Vec<Vec<Cyc>>,
    index: HashMap<RootKey, usize>,
    action: Vec<Vec<Option<usize>>>,
}

impl RootStore {
    fn intern(&mut self, coords: Vec<Cyc>, rank: usize) -> usize {
        let k = key(&coords);
        if let Some(&id) = self.index.get(&k) {
            return id;
        }
        let id = self.coords.len();
        self.coords.push(coords);
        self.action.push(vec![None; rank]);
        self.index.insert(k, id);
        id
    }
}

/// Coxeter system with its minimal-root table and a root cache used by the
/// word problem.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    gram: Vec<Vec<Cyc>>,
    store: Mutex<RootStore>,
    /// Store ids of the minimal roots, simple roots first.
    minimal: Vec<usize>,
    minimal_index: HashMap<usize, usize>,
    table: Vec<Vec<RootAction>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("matrix", &self.matrix)
            .field("minimal_roots", &self.minimal.len())
            .finish()
    }
}

const MAX_MINIMAL_ROOTS: usize = 100_000;

/// Bitset over minimal roots.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct State(Vec<u64>);

impl State {
    fn empty(n: usize) -> State {
        State(vec![0; n.div_ceil(64)])
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.contains(i))
    }
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Result<Self, CoxeterError> {
        let rank = matrix.rank();
        let gram: Vec<Vec<Cyc>> = (0..rank)
            .map(|i| (0..rank).map(|j| matrix.gram2(i, j)).collect())
            .collect();
        let n = matrix.modulus();
        let mut store = RootStore {
            coords: Vec::new(),
            index: HashMap::new(),
            action: Vec::new(),
        };
        for i in 0..rank {
            let coords = (0..rank).map(|j| Cyc::from_int(n, (i == j) as i64)).collect();
            store.intern(coords, rank);
        }
        let mut sys = CoxeterSystem {
            matrix,
            gram,
            store: Mutex::new(store),
            minimal: (0..rank).collect(),
            minimal_index: (0..rank).map(|i| (i, i)).collect(),
            table: Vec::new(),
        };
        sys.build_table()?;
        Ok(sys)
    }

    pub fn triangle(k: u32, n: u32, m: u32) -> Result<Self, CoxeterError> {
        Self::new(CoxeterMatrix::triangle(k, n, m)?)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `2 B(β, α_s)` for a root given by coordinates.
    fn pairing(&self, coords: &[Cyc], s: usize) -> Cyc {
        let n = self.matrix.modulus();
        coords
            .iter()
            .zip(&self.gram)
            .filter(|(c, _)| !c.is_zero())
            .fold(Cyc::zero(n), |acc, (c, row)| &acc + &(c * &row[s]))
    }

    /// Reflection of an interned root in `α_s`.
    fn act(&self, id: usize, s: usize) -> usize {
        let mut store = self.store.lock().expect("root store poisoned");
        if let Some(t) = store.action[id][s] {
            return t;
        }
        let coords = store.coords[id].clone();
        let b = self.pairing(&coords, s);
        let mut image = coords;
        image[s] = &image[s] - &b;
        let t = store.intern(image, self.rank());
        store.action[id][s] = Some(t);
        if store.action[t][s].is_none() {
            store.action[t][s] = Some(id);
        }
        t
    }

    fn build_table(&mut self) -> Result<(), CoxeterError> {
        let rank = self.rank();
        let two = Cyc::from_int(self.matrix.modulus(), 2);
        let mut i = 0;
        while i < self.minimal.len() {
            let id = self.minimal[i];
            let mut row = Vec::with_capacity(rank);
            for s in 0..rank {
                if id == s {
                    row.push(RootAction::Negative);
                    continue;
                }
                let coords = self.store.lock().expect("root store poisoned").coords[id].clone();
                let b = self.pairing(&coords, s);
                // B(β, α_s) <= -1 means s(β) dominates α_s
                if (&b + &two).real_sign()? != Ordering::Greater {
                    row.push(RootAction::Elevated);
                    continue;
                }
                let t = self.act(id, s);
                let j = match self.minimal_index.get(&t) {
                    Some(&j) => j,
                    None => {
                        if self.minimal.len() >= MAX_MINIMAL_ROOTS {
                            return Err(CoxeterError::TooManyRoots(MAX_MINIMAL_ROOTS));
                        }
                        self.minimal_index.insert(t, self.minimal.len());
                        self.minimal.push(t);
                        self.minimal.len() - 1
                    }
                };
                row.push(RootAction::Root(j));
            }
            self.table.push(row);
            i += 1;
        }
        Ok(())
    }

    pub fn minimal_root_count(&self) -> usize {
        self.minimal.len()
    }

    pub fn minimal_roots(&self) -> Vec<Vec<Cyc>> {
        let store = self.store.lock().expect("root store poisoned");
        self.minimal.iter().map(|&id| store.coords[id].clone()).collect()
    }

    /// Action of `s` on the `i`-th minimal root.
    pub fn root_action(&self, i: usize, s: usize) -> RootAction {
        self.table[i][s]
    }

    fn transition(&self, state: &State, s: usize) -> State {
        let mut next = State::empty(self.minimal.len());
        next.insert(s);
        for i in state.iter() {
            if let RootAction::Root(j) = self.table[i][s] {
                next.insert(j);
            }
        }
        next
    }

    fn state_of(&self, word: &[usize]) -> State {
        word.iter()
            .fold(State::empty(self.minimal.len()), |st, &s| self.transition(&st, s))
    }

    fn check_letters(&self, w: &Word) -> Result<Vec<usize>, CoxeterError> {
        w.letters()
            .iter()
            .map(|l| {
                let g = l.gen();
                if g < self.rank() {
                    Ok(g)
                } else {
                    Err(CoxeterError::Generator {
                        index: g,
                        rank: self.rank(),
                    })
                }
            })
            .collect()
    }

    /// A reduced word for `w` (generators are involutions, so inverse
    /// letters are read as the generator itself).
    pub fn reduce(&self, w: &Word) -> Result<Vec<usize>, CoxeterError> {
        let letters = self.check_letters(w)?;
        let mut u: Vec<usize> = Vec::with_capacity(letters.len());
        let mut state = State::empty(self.minimal.len());
        for s in letters {
            if !state.contains(s) {
                state = self.transition(&state, s);
                u.push(s);
                continue;
            }
            // u s is shorter: delete the letter found by the exchange condition
            let mut beta = s;
            let mut hit = None;
            for j in (0..u.len()).rev() {
                if beta == u[j] {
                    hit = Some(j);
                    break;
                }
                beta = self.act(beta, u[j]);
            }
            let j = hit.expect("exchange condition locates a letter");
            u.remove(j);
            state = self.state_of(&u);
        }
        Ok(u)
    }

    /// ShortLex normal form with `r1 < r2 < ...`.
    pub fn nf(&self, w: &Word) -> Result<Word, CoxeterError> {
        let mut u = self.reduce(w)?;
        let mut out = Vec::with_capacity(u.len());
        while !u.is_empty() {
            let rev: Vec<usize> = u.iter().rev().copied().collect();
            let left = self.state_of(&rev);
            let s = (0..self.rank())
                .find(|&s| left.contains(s))
                .expect("nonempty word has a left descent");
            let mut beta = s;
            let mut hit = None;
            for (j, &x) in u.iter().enumerate() {
                if beta == x {
                    hit = Some(j);
                    break;
                }
                beta = self.act(beta, x);
            }
            u.remove(hit.expect("left exchange locates a letter"));
            out.push(s);
        }
        Ok(Word::product_of(out))
    }

    pub fn length(&self, w: &Word) -> Result<usize, CoxeterError> {
        Ok(self.reduce(w)?.len())
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool, CoxeterError> {
        Ok(self.reduce(w)?.is_empty())
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, CoxeterError> {
        self.is_identity(&u.concat(&v.inverse()))
    }

    /// Least `p` in `1..=bound` with `w^p = 1`.
    pub fn element_order(&self, w: &Word, bound: usize) -> Result<Option<usize>, CoxeterError> {
        let mut cur = self.reduce(w)?;
        let base = Word::product_of(cur.clone());
        for p in 1..=bound {
            if cur.is_empty() {
                return Ok(Some(p));
            }
            cur = self.reduce(&Word::product_of(cur).concat(&base))?;
        }
        Ok(None)
    }

    /// Whether the root `w(α_s)` is negative, decided from explicit root
    /// coordinates rather than the automaton.
    pub fn is_right_descent_by_roots(&self, w: &Word, s: usize) -> Result<bool, CoxeterError> {
        let letters = self.check_letters(w)?;
        let mut beta = s;
        for &g in letters.iter().rev() {
            beta = self.act(beta, g);
        }
        let coords = self.store.lock().expect("root store poisoned").coords[beta].clone();
        for c in coords {
            match c.real_sign()? {
                Ordering::Greater => return Ok(false),
                Ordering::Less => return Ok(true),
                Ordering::Equal => {}
            }
        }
        unreachable!("roots are nonzero")
    }

    /// All elements up to `max_len` by breadth-first search over normal
    /// forms, grouped by length.
    pub fn elements_by_length(&self, max_len: usize) -> Result<Vec<Vec<Word>>, CoxeterError> {
        let mut layers = vec![vec![Word::identity()]];
        let mut seen: HashSet<Word> = HashSet::from([Word::identity()]);
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in layers.last().unwrap() {
                for s in 0..self.rank() {
                    let v = self.nf(&w.concat(&Word::gen(s)))?;
                    if v.len() == w.len() + 1 && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            layers.push(next);
        }
        Ok(layers)
    }

    /// Gram matrix `B` restricted to a subset is positive definite
    /// (Sylvester's criterion), which holds exactly when `W_J` is finite.
    pub fn is_finite_parabolic(&self, subset: &[usize]) -> Result<bool, CoxeterError> {
        for k in 1..=subset.len() {
            let minor: Vec<Vec<Cyc>> = subset[..k]
                .iter()
                .map(|&i| subset[..k].iter().map(|&j| self.gram[i][j].clone()).collect())
                .collect();
            if determinant(&minor).real_sign()? != Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Leibniz expansion; fine for the small ranks used here.
fn determinant(m: &[Vec<Cyc>]) -> Cyc {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let modulus = m[0][0].modulus();
    let mut total = Cyc::zero(modulus);
    for col in 0..n {
        let minor: Vec<Vec<Cyc>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &determinant(&minor);
        total = if col % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the length; well defined since every relator has even length.
pub fn parity(w: &Word) -> Parity {
    if w.len().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleType {
    Spherical,
    Affine,
    Hyperbolic,
}

/// Compares `1/k + 1/n + 1/m` with 1 exactly.
pub fn classify_triangle(k: u32, n: u32, m: u32) -> TriangleType {
    let (k, n, m) = (k as u64, n as u64, m as u64);
    let lhs = n * m + k * m + k * n;
    match lhs.cmp(&(k * n * m)) {
        Ordering::Greater => TriangleType::Spherical,
        Ordering::Equal => TriangleType::Affine,
        Ordering::Less => TriangleType::Hyperbolic,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicEntry {
    pub subset: Vec<usize>,
    pub finite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub subsets: Vec<ParabolicEntry>,
    /// Maximal subsets with finite parabolic subgroup.
    pub maximal_finite: Vec<Vec<usize>>,
    /// Order of `W_J^+` for each member of `maximal_finite`.
    pub rotation_orders: Vec<u64>,
}

impl ParabolicReport {
    pub fn sorted_orders(&self) -> Vec<u64> {
        let mut v = self.rotation_orders.clone();
        v.sort_unstable();
        v
    }
}

pub fn maximal_finite_parabolics(sys: &CoxeterSystem) -> Result<ParabolicReport, CoxeterError> {
    let r = sys.rank();
    let mut subsets = Vec::new();
    for mask in 0u32..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
        let finite = sys.is_finite_parabolic(&subset)?;
        subsets.push(ParabolicEntry { subset, finite });
    }
    let finite: Vec<&Vec<usize>> = subsets.iter().filter(|e| e.finite).map(|e| &e.subset).collect();
    let maximal_finite: Vec<Vec<usize>> = finite
        .iter()
        .filter(|j| {
            !finite
                .iter()
                .any(|k| k.len() > j.len() && j.iter().all(|x| k.contains(x)))
        })
        .map(|j| (*j).clone())
        .collect();
    let mut rotation_orders = Vec::new();
    for j in &maximal_finite {
        let order = match j.len() {
            0 | 1 => 1,
            2 => {
                let w = Word::product_of([j[0], j[1]]);
                let label = sys.matrix.label(j[0], j[1]).expect("finite pair has a finite label");
                sys.element_order(&w, 2 * label as usize)?
                    .expect("rotation has finite order") as u64
            }
            _ => {
                let sub = CoxeterSystem::new(sys.matrix.submatrix(j))?;
                let total: usize = sub.elements_by_length(usize::MAX)?.iter().map(Vec::len).sum();
                (total / 2) as u64
            }
        };
        rotation_orders.push(order);
    }
    Ok(ParabolicReport {
        subsets,
        maximal_finite,
        rotation_orders,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub order: usize,
    /// Normal forms of the central elements of `W`.
    pub center: Vec<String>,
    /// Normal forms of the central elements of `W^+`.
    pub center_plus: Vec<String>,
    pub center_parities: Vec<Parity>,
    pub contained: bool,
}

/// Computes `Z(W)` and `Z(W^+)` on the Cayley table of a finite triangle
/// group and checks `Z(W^+) ⊆ Z(W)`.
pub fn center_check_plus(k: u32, n: u32, m: u32) -> Result<CenterReport, CoxeterError> {
    if classify_triangle(k, n, m) != TriangleType::Spherical {
        return Err(CoxeterError::Infinite);
    }
    let params = FamilyParams::new(crate::presentations::Family::CoxeterTriangle, &[k, n, m])
        .map_err(|e| CoxeterError::Matrix(e.to_string()))?;
    let p = build(&params).map_err(|e| CoxeterError::Matrix(e.to_string()))?;
    let table = CayleyTable::from_presentation(&p, EnumOptions::default())
        .map_err(|e| CoxeterError::Enumeration(e.to_string()))?;
    let sys = CoxeterSystem::triangle(k, n, m)?;
    let even = |g: usize| table.representative(g).len() % 2 == 0;
    let center: Vec<usize> = table.center();
    let rotations = [
        table.element(&Word::product_of([0, 1])),
        table.element(&Word::product_of([1, 2])),
    ];
    let center_plus: Vec<usize> = (0..table.order())
        .filter(|&g| even(g) && rotations.iter().all(|&a| table.mul(g, a) == table.mul(a, g)))
        .collect();
    let contained = center_plus.iter().all(|g| center.contains(g));
    let render = |g: usize| -> Result<String, CoxeterError> {
        Ok(sys.matrix.alphabet().render(&sys.nf(table.representative(g))?))
    };
    Ok(CenterReport {
        order: table.order(),
        center_parities: center.iter().map(|&g| parity(table.representative(g))).collect(),
        center: center.iter().map(|&g| render(g)).collect::<Result<_, _>>()?,
        center_plus: center_plus.iter().map(|&g| render(g)).collect::<Result<_, _>>()?,
        contained,
    })
}

/// Word `(r_i r_j)^p`.
pub fn rotation_power(i: usize, j: usize, p: usize) -> Word {
    Word::product_of([i, j]).pow(p as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_root_counts_finite() {
        // finite groups: minimal roots are all positive roots
        assert_eq!(CoxeterSystem::triangle(3, 2, 3).unwrap().minimal_root_count(), 6);
        assert_eq!(CoxeterSystem::triangle(4, 2, 3).unwrap().minimal_root_count(), 9);
        assert_eq!(CoxeterSystem::triangle(2, 3, 5).unwrap().minimal_root_count(), 15);
    }

    #[test]
    fn relators_vanish() {
        let sys = CoxeterSystem::triangle(2, 3, 7).unwrap();
        assert!(sys.is_identity(&rotation_power(0, 1, 2)).unwrap());
        assert!(sys.is_identity(&rotation_power(1, 2, 3)).unwrap());
        assert!(sys.is_identity(&rotation_power(2, 0, 7)).unwrap());
        assert_eq!(sys.element_order(&Word::product_of([0, 2]), 50).unwrap(), Some(7));
        assert!(!sys.is_identity(&Word::product_of([0, 1, 2]).pow(10)).unwrap());
    }

    #[test]
    fn shortlex_examples() {
        let sys = CoxeterSystem::triangle(3, 2, 3).unwrap();
        let a = sys.matrix().alphabet();
        // r2 r1 r2 = r1 r2 r1 in the braid relation of label 3
        assert_eq!(a.render(&sys.nf(&a.parse("r2 r1 r2").unwrap()).unwrap()), "r1 r2 r1");
        // r3 r2 = r2 r3 (label 2 between r2, r3)
        assert_eq!(a.render(&sys.nf(&a.parse("r3 r2").unwrap()).unwrap()), "r2 r3");
        assert!(sys.nf(&Word::identity()).unwrap().is_empty());
    }

    #[test]
    fn triangle_types() {
        assert_eq!(classify_triangle(2, 3, 5), TriangleType::Spherical);
        assert_eq!(classify_triangle(2, 3, 6), TriangleType::Affine);
        assert_eq!(classify_triangle(2, 3, 7), TriangleType::Hyperbolic);
        assert_eq!(classify_triangle(2, 2, 100), TriangleType::Spherical);
    }

    #[test]
    fn parabolics() {
        let r = maximal_finite_parabolics(&CoxeterSystem::triangle(6, 2, 3).unwrap()).unwrap();
        assert_eq!(r.maximal_finite, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(r.sorted_orders(), vec![2, 3, 6]);
        let f = maximal_finite_parabolics(&CoxeterSystem::triangle(2, 3, 5).unwrap()).unwrap();
        assert_eq!(f.maximal_finite, vec![vec![0, 1, 2]]);
        assert_eq!(f.rotation_orders, vec![60]);
        let aff = maximal_finite_parabolics(&CoxeterSystem::triangle(2, 3, 6).unwrap()).unwrap();
        assert_eq!(aff.sorted_orders(), vec![2, 3, 6]);
    }
}
