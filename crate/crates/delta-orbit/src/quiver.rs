//! The two bound quivers: the Auslander algebra of k[T]/T^n (one vertex per
//! weight, up/down arrows, mesh relations) and of its C2 skew extension (two
//! signed copies of each vertex, with the up arrows crossing signs).
//!
//! Paths are written in travel order: in a relation term `[a, b]` the arrow
//! `a` is applied first. Representations act on the left, so the matrix of
//! the path `[a, b]` is `M_b * M_a`.

use std::sync::Arc;

use crate::signed::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Auslander algebra of k[T]/T^n.
    Plain,
    /// Auslander algebra of the skew group algebra k[T]/T^n * C2.
    Signed,
}

impl AlgebraKind {
    pub fn letter(self) -> &'static str {
        match self {
            AlgebraKind::Plain => "A",
            AlgebraKind::Signed => "D",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub weight: usize,
    /// None for the plain algebra.
    pub sign: Option<Sign>,
}

impl Vertex {
    pub fn label(&self) -> String {
        match self.sign {
            None => self.weight.to_string(),
            Some(s) => format!("{}{}", self.weight, s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    /// +1 for the up arrow (weight i -> i+1), -1 for the down arrow.
    pub step: i8,
}

/// A relation is a vanishing linear combination of parallel paths; each path
/// lists arrow indices in travel order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiver {
    pub algebra: AlgebraKind,
    pub n: usize,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    /// Vertex index for a weight (plain algebra).
    pub fn vertex_plain(&self, weight: usize) -> usize {
        debug_assert_eq!(self.algebra, AlgebraKind::Plain);
        weight - 1
    }

    /// Vertex index for a signed weight (signed algebra).
    pub fn vertex_signed(&self, weight: usize, sign: Sign) -> usize {
        debug_assert_eq!(self.algebra, AlgebraKind::Signed);
        2 * (weight - 1)
            + match sign {
                Sign::Plus => 0,
                Sign::Minus => 1,
            }
    }

    pub fn vertex_index(&self, weight: usize, sign: Option<Sign>) -> usize {
        match (self.algebra, sign) {
            (AlgebraKind::Plain, None) => self.vertex_plain(weight),
            (AlgebraKind::Signed, Some(s)) => self.vertex_signed(weight, s),
            _ => panic!("sign does not match algebra kind"),
        }
    }

    fn arrow_index(&self, source: usize, step: i8) -> usize {
        self.arrows
            .iter()
            .position(|a| a.source == source && a.step == step)
            .expect("arrow exists")
    }

    /// The up arrow out of the given vertex.
    pub fn up_from(&self, v: usize) -> usize {
        self.arrow_index(v, 1)
    }

    /// The down arrow out of the given vertex.
    pub fn down_from(&self, v: usize) -> usize {
        self.arrow_index(v, -1)
    }

    /// The plain quiver: vertices 1..=n; up arrows i -> i+1 and down arrows
    /// i -> i-1; mesh relations (down after up equals up after down, as loops
    /// at each inner vertex) and the zero relation at the top.
    pub fn plain(n: usize) -> Arc<BoundQuiver> {
        assert!(n >= 1);
        let vertices = (1..=n)
            .map(|w| Vertex {
                weight: w,
                sign: None,
            })
            .collect();
        let mut arrows = Vec::new();
        for w in 1..n {
            arrows.push(Arrow {
                name: format!("a{}", w),
                source: w - 1,
                target: w,
                step: 1,
            });
        }
        for w in 2..=n {
            arrows.push(Arrow {
                name: format!("b{}", w),
                source: w - 1,
                target: w - 2,
                step: -1,
            });
        }
        let mut q = BoundQuiver {
            algebra: AlgebraKind::Plain,
            n,
            vertices,
            arrows,
            relations: vec![],
        };
        let mut relations = Vec::new();
        for w in 2..n {
            // loop at w: up then down, minus down then up
            let v = q.vertex_plain(w);
            relations.push(Relation {
                terms: vec![
                    (1, vec![q.down_from(v), q.up_from(v - 1)]),
                    (-1, vec![q.up_from(v), q.down_from(v + 1)]),
                ],
            });
        }
        if n >= 2 {
            let v = q.vertex_plain(n);
            relations.push(Relation {
                terms: vec![(1, vec![q.down_from(v), q.up_from(v - 1)])],
            });
        }
        q.relations = relations;
        Arc::new(q)
    }

    /// The signed quiver: vertices (1..=n) x {+,-}; up arrows flip the sign,
    /// down arrows keep it; the mesh and top relations hold on each rail.
    pub fn signed(n: usize) -> Arc<BoundQuiver> {
        assert!(n >= 1);
        let mut vertices = Vec::new();
        for w in 1..=n {
            for s in [Sign::Plus, Sign::Minus] {
                vertices.push(Vertex {
                    weight: w,
                    sign: Some(s),
                });
            }
        }
        let mut q = BoundQuiver {
            algebra: AlgebraKind::Signed,
            n,
            vertices,
            arrows: vec![],
            relations: vec![],
        };
        let mut arrows = Vec::new();
        for w in 1..n {
            for s in [Sign::Plus, Sign::Minus] {
                arrows.push(Arrow {
                    name: format!("a{}{}", w, s.as_char()),
                    source: q.vertex_signed(w, s),
                    target: q.vertex_signed(w + 1, s.bar()),
                    step: 1,
                });
            }
        }
        for w in 2..=n {
            for s in [Sign::Plus, Sign::Minus] {
                arrows.push(Arrow {
                    name: format!("b{}{}", w, s.as_char()),
                    source: q.vertex_signed(w, s),
                    target: q.vertex_signed(w - 1, s),
                    step: -1,
                });
            }
        }
        q.arrows = arrows;
        let mut relations = Vec::new();
        for w in 2..n {
            for s in [Sign::Plus, Sign::Minus] {
                // loop at (w, s): down to (w-1, s) then up to (w, -s), minus
                // up to (w+1, -s) then down to (w, -s)
                let v = q.vertex_signed(w, s);
                let below = q.vertex_signed(w - 1, s);
                let above = q.vertex_signed(w + 1, s.bar());
                relations.push(Relation {
                    terms: vec![
                        (1, vec![q.down_from(v), q.up_from(below)]),
                        (-1, vec![q.up_from(v), q.down_from(above)]),
                    ],
                });
            }
        }
        if n >= 2 {
            for s in [Sign::Plus, Sign::Minus] {
                let v = q.vertex_signed(n, s);
                let below = q.vertex_signed(n - 1, s);
                relations.push(Relation {
                    terms: vec![(1, vec![q.down_from(v), q.up_from(below)])],
                });
            }
        }
        q.relations = relations;
        Arc::new(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_quiver_shape() {
        let q = BoundQuiver::plain(4);
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrows.len(), 6);
        // mesh at 2, 3 plus the top zero relation
        assert_eq!(q.relations.len(), 3);
        for rel in &q.relations {
            for (_, path) in &rel.terms {
                // all relation paths have length two and are loops
                assert_eq!(path.len(), 2);
                assert_eq!(
                    q.arrows[path[0]].source,
                    q.arrows[path[1]].target
                );
            }
        }
    }

    #[test]
    fn signed_quiver_shape() {
        let q = BoundQuiver::signed(4);
        assert_eq!(q.vertices.len(), 8);
        assert_eq!(q.arrows.len(), 12);
        assert_eq!(q.relations.len(), 6);
        // up arrows flip the sign
        for a in &q.arrows {
            let s = q.vertices[a.source];
            let t = q.vertices[a.target];
            if a.step == 1 {
                assert_eq!(t.weight, s.weight + 1);
                assert_eq!(t.sign, s.sign.map(Sign::bar));
            } else {
                assert_eq!(t.weight + 1, s.weight);
                assert_eq!(t.sign, s.sign);
            }
        }
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(BoundQuiver::plain(1).arrows.len(), 0);
        assert_eq!(BoundQuiver::plain(2).relations.len(), 1);
        assert_eq!(BoundQuiver::signed(1).arrows.len(), 0);
        assert_eq!(BoundQuiver::signed(2).relations.len(), 2);
    }
}
