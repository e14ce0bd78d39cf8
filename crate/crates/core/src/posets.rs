//! Finite posets and their linear extensions.
//!
//! A Young diagram becomes the poset on its nodes generated by
//! `(i,j) ⋖ (i+1,j)` and `(i,j) ⋖ (i,j+1)`; its linear extensions are
//! exactly the standard Young tableaux of the shape.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::shapes::{Node, Partition, StandardTableau};

/// A finite strict partial order on labelled elements.
///
/// The order relation is kept as a dense `n × n` table so comparisons are a
/// single lookup. `covers` holds the Hasse diagram, whatever generating
/// relations were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    less: Vec<bool>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    shape: Option<Partition>,
}

impl Poset {
    /// Builds a poset from labels and generating relations `(a, b)`, read
    /// as `a < b`. Relations need not be covers; the transitive closure and
    /// reduction are computed here.
    pub fn from_covers<S: AsRef<str>>(elements: Vec<String>, covers: &[(S, S)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for label in &elements {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let index = |label: &str| {
            elements
                .iter()
                .position(|e| e == label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((index(a.as_ref())?, index(b.as_ref())?));
        }
        Poset::from_relations(elements, &pairs)
    }

    /// Same as [`Poset::from_covers`] with relations given by element index.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::Cycle);
            }
            succ[a].push(b);
        }
        let topo = topological_order(&succ).ok_or(Error::Cycle)?;

        // Closure by sweeping a reverse topological order.
        let mut less = vec![false; n * n];
        for &a in topo.iter().rev() {
            for &b in &succ[a] {
                less[a * n + b] = true;
                for c in 0..n {
                    if less[b * n + c] {
                        less[a * n + c] = true;
                    }
                }
            }
        }

        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if less[a * n + b] && !(0..n).any(|c| less[a * n + c] && less[c * n + b]) {
                    covers.push((a, b));
                }
            }
        }
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }
        Ok(Poset {
            labels,
            covers,
            less,
            lower_covers,
            upper_covers,
            shape: None,
        })
    }

    /// The poset of nodes of `λ`, elements in row-reading order and labelled
    /// `"i,j"`.
    pub fn young(shape: &Partition) -> Self {
        let nodes: Vec<Node> = shape.nodes().collect();
        let labels = nodes.iter().map(|node| node.to_string()).collect();
        let mut relations = Vec::new();
        for (idx, node) in nodes.iter().enumerate() {
            if let Some(right) = shape.node_index(Node::new(node.row, node.col + 1)) {
                relations.push((idx, right));
            }
            if let Some(below) = shape.node_index(Node::new(node.row + 1, node.col)) {
                relations.push((idx, below));
            }
        }
        let mut poset =
            Poset::from_relations(labels, &relations).expect("Young diagram relations are acyclic");
        poset.shape = Some(shape.clone());
        poset
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> &str {
        &self.labels[element]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs of the Hasse diagram, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, element: usize) -> &[usize] {
        &self.lower_covers[element]
    }

    pub fn upper_covers(&self, element: usize) -> &[usize] {
        &self.upper_covers[element]
    }

    /// Strict comparison `a ≺ b`.
    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.len() + b]
    }

    /// The Young shape this poset was built from, if any.
    pub fn shape(&self) -> Option<&Partition> {
        self.shape.as_ref()
    }

    /// The node behind element `i` of a Young poset.
    pub fn node(&self, element: usize) -> Option<Node> {
        let shape = self.shape.as_ref()?;
        shape.nodes().nth(element)
    }

    /// Connectedness of the comparability graph. The empty poset counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for (b, s) in seen.iter_mut().enumerate() {
                if !*s && (self.less(a, b) || self.less(b, a)) {
                    *s = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Linear extensions, depth-first over currently-minimal elements taken
    /// in element order. The stream is lexicographic in the element indices
    /// of the order; for a Young poset the first one is the row-superstandard
    /// tableau.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// The first linear extension in canonical order.
    pub fn canonical_extension(&self) -> LinearExtension<'_> {
        self.linear_extensions()
            .next()
            .expect("every finite poset has a linear extension")
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for targets in succ {
        for &b in targets {
            indegree[b] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&a| indegree[a] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(a) = ready.pop() {
        order.push(a);
        for &b in &succ[a] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A total order on the elements of a poset compatible with its order.
#[derive(Debug, Clone)]
pub struct LinearExtension<'p> {
    poset: &'p Poset,
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl<'p> LinearExtension<'p> {
    /// `order[k]` is the element of rank `k` (0-based).
    pub fn new(poset: &'p Poset, order: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if order.len() != n {
            return Err(Error::NotAnExtension);
        }
        let mut rank = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(Error::NotAnExtension);
            }
            rank[e] = k;
        }
        for &(a, b) in poset.covers() {
            if rank[a] > rank[b] {
                return Err(Error::NotAnExtension);
            }
        }
        Ok(LinearExtension { poset, order, rank })
    }

    pub fn from_labels<S: AsRef<str>>(poset: &'p Poset, labels: &[S]) -> Result<Self> {
        let order = labels
            .iter()
            .map(|l| {
                let l = l.as_ref();
                poset
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearExtension::new(poset, order)
    }

    /// Node `α` gets rank `Q(α) − 1`.
    pub fn from_tableau(poset: &'p Poset, tableau: &StandardTableau) -> Result<Self> {
        if poset.shape() != Some(tableau.shape()) {
            return Err(Error::ShapeMismatch);
        }
        let n = poset.len();
        let mut order = vec![0; n];
        for (element, value) in tableau.rows().iter().flatten().enumerate() {
            order[value - 1] = element;
        }
        let rank = tableau.rows().iter().flatten().map(|v| v - 1).collect();
        Ok(LinearExtension { poset, order, rank })
    }

    /// Inverse of [`LinearExtension::from_tableau`].
    pub fn to_tableau(&self, shape: &Partition) -> Result<StandardTableau> {
        if self.poset.shape() != Some(shape) {
            return Err(Error::ShapeMismatch);
        }
        let mut rows = Vec::with_capacity(shape.len());
        let mut offset = 0;
        for &len in shape.parts() {
            rows.push(
                self.rank[offset..offset + len]
                    .iter()
                    .map(|r| r + 1)
                    .collect(),
            );
            offset += len;
        }
        Ok(StandardTableau::from_parts_unchecked(shape.clone(), rows))
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of every element, indexed by element.
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank(&self, element: usize) -> usize {
        self.rank[element]
    }

    /// `a` comes strictly before `b` in this order.
    #[inline]
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub(crate) fn same_poset(&self, other: &LinearExtension<'_>) -> bool {
        core::ptr::eq(self.poset, other.poset) || self.poset == other.poset
    }
}

impl PartialEq for LinearExtension<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.same_poset(other)
    }
}

impl Eq for LinearExtension<'_> {}

/// Streaming enumerator behind [`Poset::linear_extensions`].
pub struct LinearExtensions<'p> {
    poset: &'p Poset,
    order: Vec<usize>,
    placed: Vec<bool>,
    pending: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'p> LinearExtensions<'p> {
    fn new(poset: &'p Poset) -> Self {
        let n = poset.len();
        LinearExtensions {
            poset,
            order: Vec::with_capacity(n),
            placed: vec![false; n],
            pending: (0..n).map(|e| poset.lower_covers(e).len()).collect(),
            started: false,
            done: false,
        }
    }

    fn place(&mut self, e: usize) {
        self.placed[e] = true;
        self.order.push(e);
        for &b in self.poset.upper_covers(e) {
            self.pending[b] -= 1;
        }
    }

    fn unplace(&mut self) -> Option<usize> {
        let e = self.order.pop()?;
        self.placed[e] = false;
        for &b in self.poset.upper_covers(e) {
            self.pending[b] += 1;
        }
        Some(e)
    }

    fn candidate(&self, start: usize) -> Option<usize> {
        (start..self.poset.len()).find(|&e| !self.placed[e] && self.pending[e] == 0)
    }

    fn emit(&self) -> LinearExtension<'p> {
        let mut rank = vec![0; self.order.len()];
        for (k, &e) in self.order.iter().enumerate() {
            rank[e] = k;
        }
        LinearExtension {
            poset: self.poset,
            order: self.order.clone(),
            rank,
        }
    }
}

impl<'p> Iterator for LinearExtensions<'p> {
    type Item = LinearExtension<'p>;

    fn next(&mut self) -> Option<LinearExtension<'p>> {
        if self.done {
            return None;
        }
        let n = self.poset.len();
        let mut start = 0;
        if self.started {
            match self.unplace() {
                Some(e) => start = e + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        loop {
            if self.order.len() == n {
                return Some(self.emit());
            }
            match self.candidate(start) {
                Some(e) => {
                    self.place(e);
                    start = 0;
                }
                None => match self.unplace() {
                    Some(e) => start = e + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// Every connected poset on `n` elements, one per isomorphism class.
///
/// Classes are found by closing every relation set compatible with the
/// natural labelling `0 < 1 < … < n−1` and keeping the lexicographically
/// smallest relation matrix over all relabellings. Elements are labelled
/// `a, b, c, …`. Practical up to `n = 6` (238 classes).
pub fn connected_posets(n: usize) -> Vec<Poset> {
    assert!(
        n <= 8,
        "connected_posets is exhaustive; n = {n} is out of reach"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut perms = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        perms.push(perm.clone());
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let mut classes = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![false; n * n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rel[i * n + j] = true;
            }
        }
        let closed = (0..n).all(|i| {
            (i + 1..n)
                .all(|j| !rel[i * n + j] || (j + 1..n).all(|k| !rel[j * n + k] || rel[i * n + k]))
        });
        if !closed || !comparability_connected(&rel, n) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| {
                let mut bits = 0u64;
                for i in 0..n {
                    for j in 0..n {
                        if rel[i * n + j] {
                            bits |= 1 << (p[i] * n + p[j]);
                        }
                    }
                }
                bits
            })
            .min()
            .unwrap_or(0);
        classes.insert(canonical);
    }

    classes
        .into_iter()
        .map(|bits| {
            let labels = (0..n)
                .map(|i| char::from(b'a' + i as u8).to_string())
                .collect();
            let relations: Vec<(usize, usize)> = (0..n * n)
                .filter(|b| bits >> b & 1 == 1)
                .map(|b| (b / n, b % n))
                .collect();
            Poset::from_relations(labels, &relations)
                .expect("relabelled closed relation is acyclic")
        })
        .collect()
}

fn comparability_connected(rel: &[bool], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for b in 0..n {
            if !seen[b] && (rel[a * n + b] || rel[b * n + a]) {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("pivot has a larger successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}
