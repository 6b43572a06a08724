//! Greedy colourings and what can be read off them.
//!
//! Both greedy formulations live here: vertex-wise (each vertex in turn takes
//! the first colour with no neighbour in it) and class-wise (each colour in turn
//! takes every remaining vertex it can). They agree on every input; the
//! equivalence is exercised by the property tests rather than assumed.
//!
//! Colour classes are numbered by creation, so "first available colour" means
//! the smallest class index. A domain smaller than the whole graph is scanned
//! in the ordering's relative order.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::{Graph, VertexOrdering};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    domain: BitSet,
    classes: Vec<Vec<usize>>,
    class_of: Vec<Option<usize>>,
}

impl Colouring {
    fn from_classes(n: usize, domain: &BitSet, classes: Vec<Vec<usize>>) -> Self {
        let mut class_of = vec![None; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = Some(i);
            }
        }
        Self {
            domain: domain.clone(),
            classes,
            class_of,
        }
    }

    /// Number of non-empty colour classes; the colour bound.
    pub fn num_colours(&self) -> usize {
        self.classes.len()
    }

    /// Classes in creation order; members in the order they were coloured.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// 0-based class index of `v`, or `None` outside the domain.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of.get(v).copied().flatten()
    }

    pub fn class_map(&self) -> &[Option<usize>] {
        &self.class_of
    }

    pub fn domain(&self) -> &BitSet {
        &self.domain
    }

    /// Classes rewritten with original labels, each sorted ascending.
    pub fn labelled_classes(&self, g: &Graph) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|class| {
                let mut labels: Vec<usize> = class.iter().map(|&v| g.label(v)).collect();
                labels.sort_unstable();
                labels
            })
            .collect()
    }

    /// Verifies partition, properness and greedy tightness (every vertex in
    /// class `i` has a neighbour in each earlier class).
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut seen = BitSet::new(g.n());
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(format!("class {i} is empty"));
            }
            for &v in class {
                if !self.domain.contains(v) {
                    return Err(format!("vertex {v} is coloured but outside the domain"));
                }
                if seen.contains(v) {
                    return Err(format!("vertex {v} appears in two classes"));
                }
                seen.insert(v);
                if self.class_of(v) != Some(i) {
                    return Err(format!("class_of({v}) disagrees with class list"));
                }
            }
            for (a, &u) in class.iter().enumerate() {
                if let Some(&w) = class[a + 1..].iter().find(|&&w| g.has_edge(u, w)) {
                    return Err(format!("adjacent vertices {u} and {w} share class {i}"));
                }
            }
            for &v in class {
                for (j, earlier) in self.classes[..i].iter().enumerate() {
                    if !earlier.iter().any(|&u| g.has_edge(u, v)) {
                        return Err(format!("vertex {v} in class {i} has no neighbour in class {j}"));
                    }
                }
            }
        }
        if seen != self.domain {
            return Err("classes do not cover the domain".to_string());
        }
        Ok(())
    }
}

/// Vertex-wise greedy colouring, plus the number of adjacency tests it made.
pub fn greedy_colour_vertexwise_counted(g: &Graph, domain: &BitSet, order: &VertexOrdering) -> (Colouring, u64) {
    let mut tests = 0u64;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in order.restrict(domain) {
        let slot = classes.iter().position(|class| {
            !class.iter().any(|&u| {
                tests += 1;
                g.has_edge(u, v)
            })
        });
        match slot {
            Some(i) => classes[i].push(v),
            None => classes.push(vec![v]),
        }
    }
    (Colouring::from_classes(g.n(), domain, classes), tests)
}

/// Class-wise greedy colouring, plus the number of adjacency tests it made.
pub fn greedy_colour_classwise_counted(g: &Graph, domain: &BitSet, order: &VertexOrdering) -> (Colouring, u64) {
    let mut tests = 0u64;
    let mut uncoloured: Vec<usize> = order.restrict(domain).collect();
    let mut classes = Vec::new();
    while !uncoloured.is_empty() {
        let mut class: Vec<usize> = Vec::new();
        let mut rest = Vec::with_capacity(uncoloured.len());
        for v in uncoloured {
            let blocked = class.iter().any(|&u| {
                tests += 1;
                g.has_edge(u, v)
            });
            if blocked {
                rest.push(v);
            } else {
                class.push(v);
            }
        }
        classes.push(class);
        uncoloured = rest;
    }
    (Colouring::from_classes(g.n(), domain, classes), tests)
}

pub fn greedy_colour_vertexwise(g: &Graph, domain: &BitSet, order: &VertexOrdering) -> Colouring {
    greedy_colour_vertexwise_counted(g, domain, order).0
}

pub fn greedy_colour_classwise(g: &Graph, domain: &BitSet, order: &VertexOrdering) -> Colouring {
    greedy_colour_classwise_counted(g, domain, order).0
}

/// What a colouring says about cliques of a given size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forced {
    /// No clique of that size fits inside the coloured domain.
    Impossible,
    /// Vertices every such clique must contain; may be empty.
    Members(Vec<usize>),
}

/// Vertices forced into any `k`-clique of the coloured domain.
///
/// A `k`-clique with `k` equal to the number of colours takes exactly one
/// vertex from each class, so the members of singleton classes are forced.
pub fn forced_members(c: &Colouring, k: usize) -> Forced {
    use std::cmp::Ordering;
    match k.cmp(&c.num_colours()) {
        Ordering::Greater => Forced::Impossible,
        Ordering::Less => Forced::Members(Vec::new()),
        Ordering::Equal => {
            let mut members: Vec<usize> = c
                .classes()
                .iter()
                .filter(|class| class.len() == 1)
                .map(|class| class[0])
                .collect();
            members.sort_unstable();
            Forced::Members(members)
        }
    }
}

/// A vertex whose deletion makes the greedy colouring use more colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MisleadingWitness {
    pub vertex: usize,
    pub colours_before: usize,
    pub colours_after: usize,
}

fn misleading_witnesses<'a>(g: &'a Graph, order: &'a VertexOrdering) -> impl Iterator<Item = MisleadingWitness> + 'a {
    let all = BitSet::full(g.n());
    let before = greedy_colour_vertexwise(g, &all, order).num_colours();
    (0..g.n()).filter_map(move |v| {
        let mut rest = all.clone();
        rest.remove(v);
        let after = greedy_colour_vertexwise(g, &rest, order).num_colours();
        (after > before).then_some(MisleadingWitness {
            vertex: v,
            colours_before: before,
            colours_after: after,
        })
    })
}

/// First vertex, by index, whose removal raises the greedy colour count.
pub fn find_misleading_vertex(g: &Graph, order: &VertexOrdering) -> Option<MisleadingWitness> {
    misleading_witnesses(g, order).next()
}

/// Every such vertex, by index.
pub fn find_all_misleading_vertices(g: &Graph, order: &VertexOrdering) -> Vec<MisleadingWitness> {
    misleading_witnesses(g, order).collect()
}
