//! Partitions, compositions, orders and tableau chains.
//!
//! Squares are indexed `(row, column)` starting at 1; rows grow downward and
//! columns to the right.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Arm, leg and related counts of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
    pub hook: usize,
    pub content: i64,
}

/// Outcome of a dominance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Partition {
    /// Validates; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{:?} is not a partition", parts)));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains_square(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i - 1) >= j
    }

    /// All squares, row by row.
    pub fn squares(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(0);
        Partition(
            (1..=n)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn stats(&self, i: usize, j: usize) -> Result<SquareStats> {
        if !self.contains_square(i, j) {
            return Err(Error::Invalid(format!(
                "square ({},{}) outside {}",
                i, j, self
            )));
        }
        let arm = self.part(i - 1) - j;
        let leg = self.0.iter().skip(i).take_while(|&&p| p >= j).count();
        Ok(SquareStats {
            arm,
            leg,
            coarm: j - 1,
            coleg: i - 1,
            hook: arm + leg + 1,
            content: j as i64 - i as i64,
        })
    }

    /// Arm and leg of a square known to lie in the diagram.
    pub fn arm_leg(&self, i: usize, j: usize) -> (usize, usize) {
        let s = self.stats(i, j).expect("square in diagram");
        (s.arm, s.leg)
    }

    pub fn colour_multiplicities(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for (i, j) in self.squares() {
            c[(j as i64 - i as i64).rem_euclid(n as i64) as usize] += 1;
        }
        c
    }

    /// `λ_i − λ_{i+1} < N` for all `i`, with `λ_{ℓ+1} = 0`.
    pub fn is_n_regular(&self, n: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < n)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().enumerate().all(|(i, &m)| m <= self.part(i))
    }

    /// `self/mu` is a horizontal strip.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (0..self.len()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    /// Rows of `self` meeting `self/mu` (1-based).
    pub fn strip_rows(&self, mu: &Partition) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > mu.part(i))
            .map(|i| i + 1)
            .collect()
    }

    /// Columns of `self` meeting `self/mu` (1-based).
    pub fn strip_columns(&self, mu: &Partition) -> Vec<usize> {
        let (c, cm) = (self.conjugate(), mu.conjugate());
        (0..c.len())
            .filter(|&j| c.part(j) > cm.part(j))
            .map(|j| j + 1)
            .collect()
    }

    /// All `mu ⊂ self` with `self/mu` a horizontal strip of size `k`.
    pub fn remove_horizontal_strips(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.len()];
        self.strip_rec(0, k, &mut cur, &mut out);
        out
    }

    fn strip_rec(&self, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == self.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip removal keeps order"));
            }
            return;
        }
        let hi = self.part(i);
        let lo = self.part(i + 1);
        for m in (lo..=hi).rev() {
            let take = hi - m;
            if take > left {
                break;
            }
            cur[i] = m;
            self.strip_rec(i + 1, left - take, cur, out);
        }
    }

    pub fn as_composition(&self, n: usize) -> Composition {
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n.max(v.len()), 0);
        Composition(v)
    }

    /// Number of parts divisible by `n`.
    pub fn parts_divisible_by(&self, n: usize) -> usize {
        self.0.iter().filter(|&&p| p % n == 0).count()
    }

    /// Multiplicity of each part value: `m[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Linear extension key of dominance: larger key first in dominance.
    pub fn dominance_key(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |s, &p| {
                *s += p;
                Some(*s)
            })
            .collect()
    }

    pub fn dominance(&self, other: &Partition) -> Dominance {
        let n = self.len().max(other.len());
        dominance_compare(&self.as_composition(n), &other.as_composition(n))
            .expect("equal lengths")
    }

    /// Multi-line Young diagram; each square shows its colour `(j−i) mod N`.
    pub fn diagram(&self, n: usize) -> String {
        let mut s = String::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                let c = (j as i64 - i as i64).rem_euclid(n.max(1) as i64);
                s.push_str(&format!("[{}]", c));
            }
            s.push('\n');
        }
        if self.is_empty() {
            s.push_str("(empty)\n");
        }
        s
    }
}

/// Integer sequence of fixed length; entries may be negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<i64>);

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Composition {
    pub fn new(v: Vec<i64>) -> Self {
        Composition(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entries sorted into non-increasing order (`t⁺`).
    pub fn sorted_desc(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    pub fn swap(&self, i: usize, j: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i, j);
        Composition(v)
    }

    fn partial_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |s, &p| {
                *s += p;
                Some(*s)
            })
            .collect()
    }
}

pub fn dominance_compare(a: &Composition, b: &Composition) -> Result<Dominance> {
    if a.len() != b.len() {
        return Err(Error::Invalid("dominance of sequences of unequal length".into()));
    }
    if a.weight() != b.weight() {
        return Ok(Dominance::Incomparable);
    }
    let (sa, sb) = (a.partial_sums(), b.partial_sums());
    let ge = sa.iter().zip(&sb).all(|(x, y)| x >= y);
    let le = sa.iter().zip(&sb).all(|(x, y)| x <= y);
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// `r ≺ t`: `t⁺ > r⁺`, or `t⁺ = r⁺` and the last nonzero `t_i − r_i` is negative.
pub fn prec_compare(r: &Composition, t: &Composition) -> Result<bool> {
    if r.len() != t.len() {
        return Err(Error::Invalid("≺ on sequences of unequal length".into()));
    }
    if r.weight() != t.weight() {
        return Ok(false);
    }
    let (rp, tp) = (r.sorted_desc(), t.sorted_desc());
    if rp != tp {
        return Ok(dominance_compare(&tp, &rp)? == Dominance::Greater);
    }
    Ok(t.0
        .iter()
        .zip(&r.0)
        .rev()
        .map(|(a, b)| a - b)
        .find(|d| *d != 0)
        .map(|d| d < 0)
        .unwrap_or(false))
}

/// Chain `∅ = λ⁽⁰⁾ ⊂ … ⊂ λ⁽ʳ⁾` with horizontal-strip steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauChain {
    pub chain: Vec<Partition>,
    pub weight: Vec<usize>,
}

pub fn enumerate_tableau_chains(shape: &Partition, weight: &[usize]) -> Vec<TableauChain> {
    if shape.weight() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![shape.clone()];
    chains_rec(weight, &mut stack, &mut out);
    out
}

fn chains_rec(weight: &[usize], stack: &mut Vec<Partition>, out: &mut Vec<TableauChain>) {
    let r = weight.len();
    let depth = stack.len() - 1;
    if depth == r {
        let mut chain = stack.clone();
        chain.reverse();
        out.push(TableauChain {
            chain,
            weight: weight.to_vec(),
        });
        return;
    }
    let top = stack.last().expect("nonempty").clone();
    let k = weight[r - 1 - depth];
    for mu in top.remove_horizontal_strips(k) {
        if depth + 1 == r && !mu.is_empty() {
            continue;
        }
        stack.push(mu);
        chains_rec(weight, stack, out);
        stack.pop();
    }
}

/// Partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    part_rec(n, n, &mut cur, &mut out);
    out
}

fn part_rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(left)).rev() {
        cur.push(p);
        part_rec(left - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of weight `0..=degree_max`, by weight then reverse-lex.
pub fn enumerate_partitions(degree_max: usize) -> impl Iterator<Item = Partition> {
    (0..=degree_max).flat_map(partitions_of)
}

/// Parses `"3,2,1"`, `"[3,2,1]"` or `""`/`"0"` for the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts: std::result::Result<Vec<usize>, _> =
        s.split(',').map(|x| x.trim().parse::<usize>()).collect();
    Partition::new(parts.map_err(|_| Error::Parse(format!("bad partition {:?}", s)))?)
}

/// Parses a comma-separated integer list.
pub fn parse_composition(s: &str) -> Result<Composition> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() {
        return Ok(Composition(Vec::new()));
    }
    let v: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    Ok(Composition(
        v.map_err(|_| Error::Parse(format!("bad composition {:?}", s)))?,
    ))
}

/// Orders partitions of equal weight so that dominance-larger ones come first.
pub fn cmp_dominance_desc(a: &Partition, b: &Partition) -> Ordering {
    b.dominance_key().cmp(&a.dominance_key())
}
