//! Finite posets with full reachability storage.
//!
//! Every element carries a [`Payload`] recording where it came from (a face,
//! a multi-homomorphism, a pair of an interval poset, ...). Constructions
//! compose payloads so that failures can print readable witnesses.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{BitMatrix, BitSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::homcomplex::MultiHom;

/// Provenance of a poset element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Payload {
    Index(usize),
    Set(VertexSet),
    /// A simplex given by its sorted vertex labels.
    Face(Vec<u32>),
    Hom(MultiHom),
    /// The element `x^op` of a dual poset.
    Op(Box<Payload>),
    Tuple(Vec<Payload>),
}

impl Payload {
    /// Toggles the dual tag; `x^op^op = x`.
    pub fn dual(self) -> Payload {
        match self {
            Payload::Op(inner) => *inner,
            other => Payload::Op(Box::new(other)),
        }
    }

    pub fn as_set(&self) -> Result<VertexSet> {
        match self {
            Payload::Set(s) => Ok(*s),
            Payload::Face(face) => VertexSet::from_labels(face.iter().copied()),
            other => Err(Error::Payload { expected: "vertex set", found: other.to_string() }),
        }
    }

    pub fn as_hom(&self) -> Result<&MultiHom> {
        match self {
            Payload::Hom(h) => Ok(h),
            other => Err(Error::Payload { expected: "multi-homomorphism", found: other.to_string() }),
        }
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Index(i) => write!(f, "{i}"),
            Payload::Set(s) => write!(f, "{s}"),
            Payload::Face(face) => {
                f.write_str("[")?;
                for (i, v) in face.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
            Payload::Hom(h) => write!(f, "{}", h.compact()),
            Payload::Op(inner) => write!(f, "{inner}^op"),
            Payload::Tuple(items) => {
                f.write_str("(")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite partially ordered set.
///
/// `leq(a, b)` is answered from a precomputed reachability matrix; the
/// transposed matrix is kept for down-set queries.
#[derive(Clone)]
pub struct Poset {
    elements: Vec<Payload>,
    up: BitMatrix,
    down: BitMatrix,
}

impl Poset {
    /// Builds a poset from an order predicate, which must be a partial order.
    ///
    /// Reflexivity and antisymmetry are checked; transitivity is the caller's
    /// contract (see [`Poset::check_transitive`]).
    pub fn from_leq<F>(elements: Vec<Payload>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = elements.len();
        let rows: Vec<BitSet> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut row = BitSet::new(n);
                for b in 0..n {
                    if leq(a, b) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        let up = BitMatrix::from_rows(rows);
        for a in 0..n {
            if !up.get(a, a) {
                return Err(Error::NotPartialOrder(format!("{} is not <= itself", elements[a])));
            }
        }
        let down = up.transpose();
        for a in 0..n {
            let mut both = up.row(a).clone();
            both.intersect_with(down.row(a));
            if both.count() != 1 {
                let b = both.iter().find(|&b| b != a).expect("count > 1");
                return Err(Error::NotPartialOrder(format!(
                    "{} and {} are mutually comparable",
                    elements[a], elements[b]
                )));
            }
        }
        Ok(Poset { elements, up, down })
    }

    /// Builds a poset as the reflexive-transitive closure of `relation`,
    /// rejecting cycles.
    pub fn from_relation(elements: Vec<Payload>, relation: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in relation {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!("relation pair ({a},{b}) out of range")));
            }
            if a != b {
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
        // Kahn's algorithm; leftover vertices lie on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            let bad = (0..n).find(|&v| indeg[v] > 0).expect("cycle vertex");
            return Err(Error::NotPartialOrder(format!("cycle through {}", elements[bad])));
        }
        let mut rows: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &v in order.iter().rev() {
            let mut row = BitSet::new(n);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&rows[w]);
            }
            rows[v] = row;
        }
        let up = BitMatrix::from_rows(rows);
        let down = up.transpose();
        Ok(Poset { elements, up, down })
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_leq((0..n).map(Payload::Index).collect(), |a, b| a <= b).expect("chain")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_leq((0..n).map(Payload::Index).collect(), |a, b| a == b).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn payload(&self, i: usize) -> &Payload {
        &self.elements[i]
    }

    pub fn payloads(&self) -> &[Payload] {
        &self.elements
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up.get(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements `>= a` as a bit row.
    pub fn up_row(&self, a: usize) -> &BitSet {
        self.up.row(a)
    }

    /// Elements `<= a` as a bit row.
    pub fn down_row(&self, a: usize) -> &BitSet {
        self.down.row(a)
    }

    /// Elements strictly above `a`, increasing index order.
    pub fn strictly_above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.up.row(a).iter().filter(move |&b| b != a)
    }

    pub fn strictly_below(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.down.row(a).iter().filter(move |&b| b != a)
    }

    /// Upper covers of `a`.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        let mut above = self.up.row(a).clone();
        above.remove(a);
        above
            .iter()
            .filter(|&b| {
                let mut between = self.down.row(b).clone();
                between.intersect_with(&above);
                between.count() == 1
            })
            .collect()
    }

    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        let mut below = self.down.row(a).clone();
        below.remove(a);
        below
            .iter()
            .filter(|&b| {
                let mut between = self.up.row(b).clone();
                between.intersect_with(&below);
                between.count() == 1
            })
            .collect()
    }

    /// All cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.upper_covers(a).into_iter().map(move |b| (a, b))).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.down.row(a).count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.up.row(a).count() == 1).collect()
    }

    /// Exhaustive transitivity check, `O(n^3 / 64)`.
    pub fn check_transitive(&self) -> Result<()> {
        for a in 0..self.len() {
            for b in self.up.row(a).iter() {
                if !self.up.row(b).is_subset(self.up.row(a)) {
                    return Err(Error::NotPartialOrder(format!(
                        "{} <= {} but the up-set of the latter is not contained in the former's",
                        self.elements[a], self.elements[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same elements, reversed order.
    pub fn opposite(&self) -> Poset {
        Poset {
            elements: self.elements.iter().cloned().map(Payload::dual).collect(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Componentwise order on `P × Q`; element `(i, j)` has index `i * |Q| + j`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let elements = (0..self.len())
            .flat_map(|i| {
                (0..m).map(move |j| Payload::Tuple(vec![self.elements[i].clone(), other.elements[j].clone()]))
            })
            .collect();
        Poset::from_leq(elements, |a, b| self.leq(a / m, b / m) && other.leq(a % m, b % m))
            .expect("product of partial orders")
    }

    /// The subposet induced on `indices`, in the given order.
    pub fn subposet(&self, indices: &[usize]) -> Poset {
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Poset::from_leq(elements, |a, b| self.leq(indices[a], indices[b])).expect("induced order")
    }

    /// `Int P`: pairs `(p, q^op)` with `p <= q`, ordered inside `P × P^op`.
    ///
    /// `(p0, q0) <= (p1, q1)` iff `[p0, q0] ⊇ [p1, q1]`.
    pub fn interval_poset(&self) -> Poset {
        let pairs = self.weak_chains::<2>();
        let elements = pairs
            .iter()
            .map(|&[p, q]| Payload::Tuple(vec![self.elements[p].clone(), self.elements[q].clone().dual()]))
            .collect();
        Poset::from_leq(elements, |a, b| {
            let ([p0, q0], [p1, q1]) = (pairs[a], pairs[b]);
            self.leq(p0, p1) && self.leq(q1, q0)
        })
        .expect("interval order")
    }

    /// 4-tuples `(p, q^op, r, s^op)` with `p <= q <= r <= s`, ordered inside
    /// `P × P^op × P × P^op`. Isomorphic to `Int(Int P)`.
    pub fn iterated_interval_poset(&self) -> Poset {
        let tuples = self.weak_chains::<4>();
        let elements = tuples
            .iter()
            .map(|&[p, q, r, s]| {
                Payload::Tuple(vec![
                    self.elements[p].clone(),
                    self.elements[q].clone().dual(),
                    self.elements[r].clone(),
                    self.elements[s].clone().dual(),
                ])
            })
            .collect();
        Poset::from_leq(elements, |a, b| {
            let ([p0, q0, r0, s0], [p1, q1, r1, s1]) = (tuples[a], tuples[b]);
            self.leq(p0, p1) && self.leq(q1, q0) && self.leq(r0, r1) && self.leq(s1, s0)
        })
        .expect("iterated interval order")
    }

    /// Triples `(p, q^op, r)` with `p <= q <= r`, ordered inside `P × P^op × P`.
    pub fn chain32_poset(&self) -> Poset {
        let triples = self.weak_chains::<3>();
        let elements = triples
            .iter()
            .map(|&[p, q, r]| {
                Payload::Tuple(vec![
                    self.elements[p].clone(),
                    self.elements[q].clone().dual(),
                    self.elements[r].clone(),
                ])
            })
            .collect();
        Poset::from_leq(elements, |a, b| {
            let ([p0, q0, r0], [p1, q1, r1]) = (triples[a], triples[b]);
            self.leq(p0, p1) && self.leq(q1, q0) && self.leq(r0, r1)
        })
        .expect("chain32 order")
    }

    /// Weakly increasing `K`-tuples `x_0 <= ... <= x_{K-1}`, lexicographic.
    pub fn weak_chains<const K: usize>(&self) -> Vec<[usize; K]> {
        let mut out = Vec::new();
        let mut cur = [0usize; K];
        fn rec<const K: usize>(p: &Poset, depth: usize, cur: &mut [usize; K], out: &mut Vec<[usize; K]>) {
            if depth == K {
                out.push(*cur);
                return;
            }
            let candidates: Vec<usize> =
                if depth == 0 { (0..p.len()).collect() } else { p.up.row(cur[depth - 1]).iter().collect() };
            for x in candidates {
                cur[depth] = x;
                rec(p, depth + 1, cur, out);
            }
        }
        rec(self, 0, &mut cur, &mut out);
        out
    }

    /// Indices in a linear extension (by down-set size, then index).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.down.row(a).count(), a));
        order
    }

    /// Number of chains of each cardinality `1..`, i.e. the f-vector of the
    /// order complex, without enumerating them.
    pub fn chain_counts(&self) -> Vec<u128> {
        let order = self.linear_extension();
        let mut per: Vec<Vec<u128>> = vec![Vec::new(); self.len()];
        for &a in order.iter().rev() {
            let mut counts = vec![1u128];
            for b in self.strictly_above(a) {
                let cb = &per[b];
                if counts.len() < cb.len() + 1 {
                    counts.resize(cb.len() + 1, 0);
                }
                for (k, &c) in cb.iter().enumerate() {
                    counts[k + 1] += c;
                }
            }
            per[a] = counts;
        }
        let mut total: Vec<u128> = Vec::new();
        for counts in &per {
            if total.len() < counts.len() {
                total.resize(counts.len(), 0);
            }
            for (k, &c) in counts.iter().enumerate() {
                total[k] += c;
            }
        }
        total
    }

    /// `ΔP`: the simplicial complex of chains, vertices are element indices.
    pub fn order_complex(&self) -> SimplicialComplex {
        let all: Vec<usize> = (0..self.len()).collect();
        self.order_complex_on(&all)
    }

    /// Order complex of the subposet on `subset`, keeping ambient indices as
    /// vertex labels.
    pub fn order_complex_on(&self, subset: &[usize]) -> SimplicialComplex {
        let mut member = BitSet::new(self.len());
        for &i in subset {
            member.insert(i);
        }
        let per_start: Vec<Vec<Vec<u32>>> = subset
            .par_iter()
            .map(|&start| {
                let mut out: Vec<Vec<u32>> = Vec::new();
                let mut chain = vec![start];
                self.extend_chains(&member, &mut chain, &mut out);
                out
            })
            .collect();
        let mut by_dim: Vec<Vec<u32>> = Vec::new();
        for chains in per_start {
            for mut c in chains {
                c.sort_unstable();
                let d = c.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].extend_from_slice(&c);
            }
        }
        SimplicialComplex::from_closed_tables(by_dim)
    }

    fn extend_chains(&self, member: &BitSet, chain: &mut Vec<usize>, out: &mut Vec<Vec<u32>>) {
        out.push(chain.iter().map(|&x| x as u32).collect());
        let top = *chain.last().expect("nonempty chain");
        let mut next = self.up.row(top).clone();
        next.remove(top);
        next.intersect_with(member);
        for y in next.iter() {
            chain.push(y);
            self.extend_chains(member, chain, out);
            chain.pop();
        }
    }

    /// Link of a chain in the order complex, computed on the poset as the join
    /// of the order complexes of `P_{<x0}`, the open intervals `(x_i, x_{i+1})`
    /// and `P_{>xk}`. Vertex labels are element indices.
    pub fn chain_link(&self, chain: &[usize]) -> Result<SimplicialComplex> {
        let mut sorted = chain.to_vec();
        sorted.sort_by_key(|&a| self.down.row(a).count());
        for w in sorted.windows(2) {
            if !self.lt(w[0], w[1]) {
                return Err(Error::NotAFace(format!("{:?} is not a chain", chain)));
            }
        }
        let Some((&first, &last)) = sorted.first().zip(sorted.last()) else {
            return Ok(self.order_complex());
        };
        let mut parts: Vec<Vec<usize>> = Vec::new();
        parts.push(self.strictly_below(first).collect());
        for w in sorted.windows(2) {
            let mut between = self.up.row(w[0]).clone();
            between.intersect_with(self.down.row(w[1]));
            between.remove(w[0]);
            between.remove(w[1]);
            parts.push(between.iter().collect());
        }
        parts.push(self.strictly_above(last).collect());
        // the pieces live on disjoint element sets, so labels never clash
        let mut link = SimplicialComplex::empty();
        for part in parts {
            link = link.join_disjoint(&self.order_complex_on(&part));
        }
        Ok(link)
    }

    /// Checks that `assignment` is monotone from `self` into `target`.
    pub fn check_monotone(&self, target: &Poset, assignment: &[usize]) -> Result<()> {
        if assignment.len() != self.len() {
            return Err(Error::InvalidParameter("assignment length differs from source size".into()));
        }
        for a in 0..self.len() {
            for b in self.up.row(a).iter() {
                if !target.leq(assignment[a], assignment[b]) {
                    return Err(Error::NotMonotone(a, b));
                }
            }
        }
        Ok(())
    }

    /// True iff `assignment` is a bijection onto `target` with monotone inverse.
    pub fn is_isomorphism(&self, target: &Poset, assignment: &[usize]) -> bool {
        if self.len() != target.len() || assignment.len() != self.len() {
            return false;
        }
        let mut seen = BitSet::new(target.len());
        for &x in assignment {
            if x >= target.len() || seen.contains(x) {
                return false;
            }
            seen.insert(x);
        }
        (0..self.len()).into_par_iter().all(|a| {
            (0..self.len()).all(|b| self.leq(a, b) == target.leq(assignment[a], assignment[b]))
        })
    }

    /// Searches for an order isomorphism `self → other`.
    ///
    /// Elements are first coloured by (down-set size, up-set size, cover
    /// degrees) and refined along cover relations; the backtracking search only
    /// pairs equally coloured elements and keeps every assigned pair's
    /// comparabilities consistent. Deterministic given the input order.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        if n == 0 {
            return Some(Vec::new());
        }
        let (cp, cq) = refine_colours(self, other);
        let mut hp: BTreeMap<usize, usize> = BTreeMap::new();
        let mut hq: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &cp {
            *hp.entry(c).or_default() += 1;
        }
        for &c in &cq {
            *hq.entry(c).or_default() += 1;
        }
        if hp != hq {
            return None;
        }
        let mut classes: HashMap<usize, BitSet> = HashMap::new();
        for (y, &c) in cq.iter().enumerate() {
            classes.entry(c).or_insert_with(|| BitSet::new(n)).insert(y);
        }
        let order = search_order(self, &cp, &hp);
        let mut assignment = vec![usize::MAX; n];
        let mut used = BitSet::new(n);
        let mut search = IsoSearch { p: self, q: other, colours: &cp, classes: &classes, order: &order };
        if search.extend(0, &mut assignment, &mut used) {
            debug_assert!(self.is_isomorphism(other, &assignment));
            Some(assignment)
        } else {
            None
        }
    }

    /// Stable text form: element list then cover relations.
    pub fn to_cover_text(&self) -> String {
        let mut out = format!("elements {}\n", self.len());
        for (i, e) in self.elements.iter().enumerate() {
            out.push_str(&format!("{i}: {e}\n"));
        }
        let covers = self.cover_relations();
        out.push_str(&format!("covers {}\n", covers.len()));
        for (a, b) in covers {
            out.push_str(&format!("{a} < {b}\n"));
        }
        out
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("len", &self.len())
            .field("covers", &self.cover_relations())
            .finish()
    }
}

impl PartialEq for Poset {
    /// Element-wise equality: same payloads in the same order, same relation.
    fn eq(&self, other: &Poset) -> bool {
        self.elements == other.elements && self.up == other.up
    }
}

fn refine_colours(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
    type Signature = (usize, Vec<usize>, Vec<usize>);
    let initial = |x: &Poset| -> Vec<(usize, usize, usize, usize)> {
        (0..x.len())
            .map(|a| {
                (x.down.row(a).count(), x.up.row(a).count(), x.lower_covers(a).len(), x.upper_covers(a).len())
            })
            .collect()
    };
    let ip = initial(p);
    let iq = initial(q);
    let mut dict: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for k in ip.iter().chain(&iq) {
        let next = dict.len();
        dict.entry(*k).or_insert(next);
    }
    let mut cp: Vec<usize> = ip.iter().map(|k| dict[k]).collect();
    let mut cq: Vec<usize> = iq.iter().map(|k| dict[k]).collect();
    let covers = |x: &Poset| -> Vec<(Vec<usize>, Vec<usize>)> {
        (0..x.len()).map(|a| (x.lower_covers(a), x.upper_covers(a))).collect()
    };
    let covp = covers(p);
    let covq = covers(q);
    let mut classes = dict.len();
    loop {
        let sig = |colours: &[usize], cov: &[(Vec<usize>, Vec<usize>)]| -> Vec<Signature> {
            cov.iter()
                .enumerate()
                .map(|(a, (lo, hi))| {
                    let mut l: Vec<usize> = lo.iter().map(|&b| colours[b]).collect();
                    let mut h: Vec<usize> = hi.iter().map(|&b| colours[b]).collect();
                    l.sort_unstable();
                    h.sort_unstable();
                    (colours[a], l, h)
                })
                .collect()
        };
        let sp = sig(&cp, &covp);
        let sq = sig(&cq, &covq);
        let mut dict: BTreeMap<&Signature, usize> = BTreeMap::new();
        for s in sp.iter().chain(&sq) {
            let next = dict.len();
            dict.entry(s).or_insert(next);
        }
        let np: Vec<usize> = sp.iter().map(|s| dict[s]).collect();
        let nq: Vec<usize> = sq.iter().map(|s| dict[s]).collect();
        let count = dict.len();
        cp = np;
        cq = nq;
        if count == classes {
            break;
        }
        classes = count;
    }
    (cp, cq)
}

/// Breadth-first order over the comparability structure, seeded in the
/// rarest colour class so that early choices constrain the rest.
fn search_order(p: &Poset, colours: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = p.len();
    let mut seen = BitSet::new(n);
    let mut order = Vec::with_capacity(n);
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&a| (hist[&colours[a]], a));
    for s in seeds {
        if seen.contains(s) {
            continue;
        }
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(a) = queue.pop_front() {
            order.push(a);
            let mut nbrs: Vec<usize> = p.lower_covers(a);
            nbrs.extend(p.upper_covers(a));
            nbrs.sort_by_key(|&b| (hist[&colours[b]], b));
            for b in nbrs {
                if !seen.contains(b) {
                    seen.insert(b);
                    queue.push_back(b);
                }
            }
        }
    }
    order
}

struct IsoSearch<'a> {
    p: &'a Poset,
    q: &'a Poset,
    colours: &'a [usize],
    classes: &'a HashMap<usize, BitSet>,
    order: &'a [usize],
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize, assignment: &mut [usize], used: &mut BitSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let mut cand = self.classes[&self.colours[x]].clone();
        cand.difference_with(used);
        for &a in &self.order[..depth] {
            let b = assignment[a];
            if self.p.leq(x, a) {
                cand.intersect_with(self.q.down.row(b));
            } else {
                cand.difference_with(self.q.down.row(b));
            }
            if self.p.leq(a, x) {
                cand.intersect_with(self.q.up.row(b));
            } else {
                cand.difference_with(self.q.up.row(b));
            }
            if cand.count() == 0 {
                return false;
            }
        }
        for y in cand.iter().collect::<Vec<_>>() {
            assignment[x] = y;
            used.insert(y);
            if self.extend(depth + 1, assignment, used) {
                return true;
            }
            used.remove(y);
            assignment[x] = usize::MAX;
        }
        false
    }
}

/// A monotone map between two posets.
#[derive(Debug, Clone)]
pub struct PosetMap<'a> {
    source: &'a Poset,
    target: &'a Poset,
    assignment: Vec<usize>,
}

impl<'a> PosetMap<'a> {
    /// Checks monotonicity before accepting the assignment.
    pub fn new(source: &'a Poset, target: &'a Poset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.iter().any(|&x| x >= target.len()) {
            return Err(Error::InvalidParameter("assignment points outside the target".into()));
        }
        source.check_monotone(target, &assignment)?;
        Ok(PosetMap { source, target, assignment })
    }

    pub fn source(&self) -> &'a Poset {
        self.source
    }

    pub fn target(&self) -> &'a Poset {
        self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, a: usize) -> usize {
        self.assignment[a]
    }

    pub fn is_identity(&self) -> bool {
        std::ptr::eq(self.source, self.target) && self.assignment.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.is_isomorphism(self.target, &self.assignment)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &PosetMap<'a>) -> Result<PosetMap<'a>> {
        if !std::ptr::eq(first.target, self.source) {
            return Err(Error::InvalidParameter("maps are not composable".into()));
        }
        let assignment = first.assignment.iter().map(|&x| self.assignment[x]).collect();
        PosetMap::new(first.source, self.target, assignment)
    }
}
