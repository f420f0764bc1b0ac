use std::fmt;

use crate::euclid::EuclidData;
use crate::{Int, Result};

/// Drawing style of an edge in an Enriques tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Slant,
    Horizontal,
    Vertical,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Slant => "slant",
            EdgeKind::Horizontal => "horizontal",
            EdgeKind::Vertical => "vertical",
        }
    }

    fn flipped(self) -> Self {
        match self {
            EdgeKind::Horizontal => EdgeKind::Vertical,
            EdgeKind::Vertical => EdgeKind::Horizontal,
            EdgeKind::Slant => EdgeKind::Slant,
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One `T_{p,q}` piece of a connected sum, with its vertex span (1-based,
/// inclusive). Consecutive segments share their boundary vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeSegment<T> {
    pub p: T,
    pub q: T,
    pub first: usize,
    pub last: usize,
}

/// A unibranch Enriques tree: the chain `P_1 → P_2 → … → P_s` with one
/// drawing kind per edge.
///
/// Vertices are 1-based throughout the public API. A tree with no vertices
/// stands for a smooth germ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnriquesTree<T> {
    vertex_count: usize,
    /// `edges[α - 1]` is the kind of `[P_α P_{α+1}]`.
    edges: Vec<EdgeKind>,
    segments: Vec<TreeSegment<T>>,
}

impl<T: Int> EnriquesTree<T> {
    /// The empty tree of a smooth germ.
    pub fn trivial() -> Self {
        EnriquesTree {
            vertex_count: 0,
            edges: Vec::new(),
            segments: Vec::new(),
        }
    }

    /// A lone root; neutral element of [`connected_sum`].
    pub fn single_vertex() -> Self {
        EnriquesTree {
            vertex_count: 1,
            edges: Vec::new(),
            segments: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_trivial(&self) -> bool {
        self.vertex_count == 0
    }

    /// Highest vertex `s`, if any.
    pub fn top(&self) -> Option<usize> {
        (self.vertex_count > 0).then_some(self.vertex_count)
    }

    pub fn edges(&self) -> &[EdgeKind] {
        &self.edges
    }

    /// Kind of the edge `[P_α P_{α+1}]`.
    pub fn edge_kind(&self, alpha: usize) -> EdgeKind {
        self.edges[alpha - 1]
    }

    pub fn segments(&self) -> &[TreeSegment<T>] {
        &self.segments
    }

    /// `g`, the number of `T_{p,q}` pieces.
    pub fn genus(&self) -> usize {
        self.segments.len()
    }

    pub fn pairs(&self) -> Vec<(T, T)> {
        self.segments
            .iter()
            .map(|s| (s.p.clone(), s.q.clone()))
            .collect()
    }

    /// Last vertex of each segment: `r_1 + … + r_j - (j - 1)`.
    pub fn junctions(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.last).collect()
    }

    /// 1-based segment containing `vertex`; shared junctions report the
    /// earlier segment.
    pub fn segment_of(&self, vertex: usize) -> Option<usize> {
        self.segments
            .iter()
            .position(|s| s.first <= vertex && vertex <= s.last)
            .map(|j| j + 1)
    }
}

/// The tree `T_{p,q}` of the minimal log resolution of `x^p = y^q`.
///
/// Edge groups have sizes `a_1, …, a_{m-1}, a_m - 1`: slant first, then
/// alternately horizontal and vertical.
pub fn build_tpq<T: Int>(p: T, q: T) -> Result<EnriquesTree<T>> {
    let euclid = EuclidData::new(p.clone(), q.clone())?;
    let sizes: Vec<usize> = euclid
        .quotients()
        .iter()
        .map(|a| a.to_usize().expect("quotient fits in usize"))
        .collect();
    let m = sizes.len();
    let vertex_count: usize = sizes.iter().sum();

    let mut edges = Vec::with_capacity(vertex_count - 1);
    let mut kind = EdgeKind::Slant;
    for (j, &size) in sizes.iter().enumerate() {
        let count = if j + 1 == m { size - 1 } else { size };
        edges.extend(std::iter::repeat_n(kind, count));
        kind = if j == 0 {
            EdgeKind::Horizontal
        } else {
            kind.flipped()
        };
    }
    debug_assert_eq!(edges.len(), vertex_count - 1);

    Ok(EnriquesTree {
        vertex_count,
        edges,
        segments: vec![TreeSegment {
            p,
            q,
            first: 1,
            last: vertex_count,
        }],
    })
}

/// `T # T'`: glue the top of `T` to the root of `T'`.
pub fn connected_sum<T: Int>(lower: &EnriquesTree<T>, upper: &EnriquesTree<T>) -> EnriquesTree<T> {
    if lower.is_trivial() {
        return upper.clone();
    }
    if upper.is_trivial() {
        return lower.clone();
    }
    let offset = lower.vertex_count - 1;
    let mut edges = lower.edges.clone();
    edges.extend_from_slice(&upper.edges);
    let mut segments = lower.segments.clone();
    segments.extend(upper.segments.iter().map(|s| TreeSegment {
        p: s.p.clone(),
        q: s.q.clone(),
        first: s.first + offset,
        last: s.last + offset,
    }));
    EnriquesTree {
        vertex_count: lower.vertex_count + upper.vertex_count - 1,
        edges,
        segments,
    }
}

/// `T_{p_1,q_1} # … # T_{p_g,q_g}`; the empty list gives the trivial tree.
pub fn from_pairs<T: Int>(pairs: &[(T, T)]) -> Result<EnriquesTree<T>> {
    let mut tree = EnriquesTree::trivial();
    for (index, (p, q)) in pairs.iter().enumerate() {
        let piece = build_tpq(p.clone(), q.clone()).map_err(|e| e.at_pair(index + 1))?;
        tree = connected_sum(&tree, &piece);
    }
    Ok(tree)
}
