//! Satellite tree model, JSON (de)serialization, and structural validation.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use slope_core::SlopeInterval;

use crate::GraphError;
use seifert_engine::SeifertVertex;

/// Raw weights of one tree vertex: the exterior of the `(np, nq)` torus
/// link in a solid torus, with `n` link components. Stored unvalidated so
/// that [`validate_tree`] can report violations instead of refusing to
/// construct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub p: BigInt,
    pub q: BigInt,
    pub n: usize,
}

/// One splice edge, directed rootward: `from` is the child whose outer
/// boundary is glued into the parent `to`. `j` names the parent slot:
/// `1..=n_to` for a smooth splice onto that link component, `-1` for the
/// exceptional splice onto the multiplicity-`p` fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub from: String,
    pub to: String,
    pub j: i64,
}

/// What is glued to the root's outer boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompanionKnot {
    /// Solid torus: gluing it is a Dehn filling of the root.
    Unknot,
    /// A nontrivial knot all of whose large surgeries are L-spaces; its
    /// own surgery interval is `[2·genus − 1, +∞]`.
    PositiveLSpaceKnot { genus: u64 },
    /// A knot exterior with a caller-supplied L-space interval in the
    /// standard surgery basis. Constructible through the API only (not
    /// part of the JSON format); the interval must contain more than one
    /// slope for the gluing criterion to apply.
    FloerSimple { interval: SlopeInterval },
}

/// A rooted satellite splice tree plus the companion glued at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatelliteTree {
    pub vertices: BTreeMap<String, VertexData>,
    pub root: String,
    pub edges: Vec<TreeEdge>,
    pub companion: CompanionKnot,
}

/// One structural violation found by [`validate_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    /// Vertex id, `"edge from->to"`, or `"tree"`/`"companion"`.
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Serialize, Deserialize)]
struct CompanionFile {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct VertexFile {
    id: String,
    p: i64,
    q: i64,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    from: String,
    to: String,
    j: i64,
}

#[derive(Serialize, Deserialize)]
struct TreeFile {
    companion: CompanionFile,
    vertices: Vec<VertexFile>,
    root: String,
    #[serde(default)]
    edges: Vec<EdgeFile>,
}

impl SatelliteTree {
    /// Builds a single-vertex tree: the plain torus-link satellite.
    pub fn single_vertex(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        n: usize,
        companion: CompanionKnot,
    ) -> Self {
        let mut vertices = BTreeMap::new();
        vertices.insert(
            "v1".to_string(),
            VertexData {
                p: p.into(),
                q: q.into(),
                n,
            },
        );
        Self {
            vertices,
            root: "v1".to_string(),
            edges: Vec::new(),
            companion,
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let file: TreeFile =
            serde_json::from_str(text).map_err(|e| GraphError::ParseInput(e.to_string()))?;
        let companion = match file.companion.kind.as_str() {
            "unknot" => CompanionKnot::Unknot,
            "lspace_knot" => {
                let genus = file.companion.genus.ok_or_else(|| {
                    GraphError::ParseInput(
                        "companion kind \"lspace_knot\" requires a \"genus\" field".into(),
                    )
                })?;
                CompanionKnot::PositiveLSpaceKnot { genus }
            }
            other => {
                return Err(GraphError::ParseInput(format!(
                    "unknown companion kind {other:?} (expected \"unknot\" or \"lspace_knot\")"
                )))
            }
        };
        let mut vertices = BTreeMap::new();
        for v in file.vertices {
            if vertices
                .insert(
                    v.id.clone(),
                    VertexData {
                        p: BigInt::from(v.p),
                        q: BigInt::from(v.q),
                        n: v.n,
                    },
                )
                .is_some()
            {
                return Err(GraphError::ParseInput(format!(
                    "duplicate vertex id {:?}",
                    v.id
                )));
            }
        }
        Ok(Self {
            vertices,
            root: file.root,
            edges: file
                .edges
                .into_iter()
                .map(|e| TreeEdge {
                    from: e.from,
                    to: e.to,
                    j: e.j,
                })
                .collect(),
        companion,
        })
    }

    /// Serializes to the JSON file format. The Floer-simple companion has
    /// no file representation.
    pub fn to_json_string(&self) -> Result<String, GraphError> {
        let companion = match &self.companion {
            CompanionKnot::Unknot => CompanionFile {
                kind: "unknot".into(),
                genus: None,
            },
            CompanionKnot::PositiveLSpaceKnot { genus } => CompanionFile {
                kind: "lspace_knot".into(),
                genus: Some(*genus),
            },
            CompanionKnot::FloerSimple { .. } => {
                return Err(GraphError::ParseInput(
                    "a Floer-simple interval companion has no JSON representation".into(),
                ))
            }
        };
        let file = TreeFile {
            companion,
            vertices: self
                .vertices
                .iter()
                .map(|(id, v)| {
                    Ok(VertexFile {
                        id: id.clone(),
                        p: i64::try_from(&v.p).map_err(|_| {
                            GraphError::ParseInput(format!("vertex {id}: p out of file range"))
                        })?,
                        q: i64::try_from(&v.q).map_err(|_| {
                            GraphError::ParseInput(format!("vertex {id}: q out of file range"))
                        })?,
                        n: v.n,
                    })
                })
                .collect::<Result<Vec<_>, GraphError>>()?,
            root: self.root.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeFile {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    j: e.j,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).map_err(|e| GraphError::ParseInput(e.to_string()))
    }

    pub fn vertex(&self, id: &str) -> Result<&VertexData, GraphError> {
        self.vertices
            .get(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    /// Constructs the validated Seifert piece for one vertex.
    pub fn seifert(&self, id: &str) -> Result<SeifertVertex, GraphError> {
        let v = self.vertex(id)?;
        Ok(SeifertVertex::new(v.p.clone(), v.q.clone(), v.n)?)
    }

    pub fn incoming(&self, id: &str) -> Vec<&TreeEdge> {
        self.edges.iter().filter(|e| e.to == id).collect()
    }

    pub fn outgoing(&self, id: &str) -> Option<&TreeEdge> {
        self.edges.iter().find(|e| e.from == id)
    }

    /// Parent slots occupied by smooth splices into `id`.
    pub fn smooth_in_slots(&self, id: &str) -> BTreeSet<i64> {
        self.incoming(id)
            .into_iter()
            .filter(|e| e.j != -1)
            .map(|e| e.j)
            .collect()
    }

    /// The unique exceptional in-edge of `id`, if any.
    pub fn exceptional_in(&self, id: &str) -> Option<&TreeEdge> {
        self.incoming(id).into_iter().find(|e| e.j == -1)
    }

    /// Unfilled link-component indices of `id` (1-based), in order.
    pub fn free_slots(&self, id: &str) -> Result<Vec<usize>, GraphError> {
        let v = self.vertex(id)?;
        let taken = self.smooth_in_slots(id);
        Ok((1..=v.n)
            .filter(|i| !taken.contains(&(*i as i64)))
            .collect())
    }

    /// All (vertex, slot) pairs needing a filled slope, in canonical
    /// (sorted-by-id, then slot) order.
    pub fn all_free_slots(&self) -> Result<Vec<(String, usize)>, GraphError> {
        let mut out = Vec::new();
        for id in self.vertices.keys() {
            for i in self.free_slots(id)? {
                out.push((id.clone(), i));
            }
        }
        Ok(out)
    }
}

/// Checks every structural invariant and returns the violations (empty
/// means valid): vertex weights positive/coprime with `q ≠ 0`, slot
/// indices in range and distinct, at most one exceptional in-edge per
/// vertex and only into `p > 1` vertices, and rootward tree shape
/// (unique outgoing edge for non-roots, none for the root, no cycles,
/// all vertices connected to the root).
pub fn validate_tree(t: &SatelliteTree) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut diag = |location: &str, message: String| {
        out.push(Diagnostic {
            location: location.to_string(),
            message,
        })
    };

    if !t.vertices.contains_key(&t.root) {
        diag("tree", format!("root {:?} is not a vertex", t.root));
    }
    if let CompanionKnot::PositiveLSpaceKnot { genus } = &t.companion {
        if *genus < 1 {
            diag("companion", "lspace_knot genus must be at least 1".into());
        }
    }

    for (id, v) in &t.vertices {
        if v.p < BigInt::one() {
            diag(id, format!("multiplicity p must be positive, got {}", v.p));
        }
        if v.q.is_zero() {
            diag(id, "weight q must be nonzero".into());
        }
        if v.n == 0 {
            diag(id, "component count n must be positive".into());
        }
        if !v.p.is_zero() && !v.q.is_zero() && v.p.gcd(&v.q.abs()) != BigInt::one() {
            diag(id, format!("weights ({}, {}) are not coprime", v.p, v.q));
        }
    }

    for e in &t.edges {
        let loc = format!("edge {}->{}", e.from, e.to);
        let from_ok = t.vertices.contains_key(&e.from);
        let to_ok = t.vertices.contains_key(&e.to);
        if !from_ok {
            diag(&loc, format!("unknown child vertex {:?}", e.from));
        }
        if !to_ok {
            diag(&loc, format!("unknown parent vertex {:?}", e.to));
        }
        if e.from == e.to {
            diag(&loc, "self loop".into());
        }
        if !from_ok || !to_ok {
            continue;
        }
        let parent = &t.vertices[&e.to];
        if e.j == -1 {
            if parent.p <= BigInt::one() {
                diag(
                    &loc,
                    "exceptional splice requires the parent multiplicity p > 1".into(),
                );
            }
        } else if e.j < 1 || e.j > parent.n as i64 {
            diag(
                &loc,
                format!(
                    "slot {} out of range (parent has components 1..={})",
                    e.j, parent.n
                ),
            );
        }
    }

    for id in t.vertices.keys() {
        let incoming = t.incoming(id);
        let mut smooth_seen = BTreeSet::new();
        let mut exceptional = 0usize;
        for e in incoming {
            if e.j == -1 {
                exceptional += 1;
            } else if !smooth_seen.insert(e.j) {
                diag(id, format!("slot {} has more than one incoming splice", e.j));
            }
        }
        if exceptional > 1 {
            diag(id, "more than one incoming exceptional splice".into());
        }

        let outgoing: Vec<_> = t.edges.iter().filter(|e| &e.from == id).collect();
        if id == &t.root {
            if !outgoing.is_empty() {
                diag(id, "the root must not have an outgoing edge".into());
            }
        } else {
            match outgoing.len() {
                1 => {}
                0 => diag(id, "non-root vertex has no outgoing edge".into()),
                k => diag(id, format!("vertex has {k} outgoing edges (expected 1)")),
            }
        }
    }

    // Rootward reachability with cycle detection along parent pointers.
    for id in t.vertices.keys() {
        let mut cur = id.clone();
        let mut seen = BTreeSet::new();
        seen.insert(cur.clone());
        loop {
            if cur == t.root {
                break;
            }
            match t.outgoing(&cur) {
                Some(e) if t.vertices.contains_key(&e.to) => {
                    cur = e.to.clone();
                    if !seen.insert(cur.clone()) {
                        diag(id, "edge cycle: vertex cannot reach the root".into());
                        break;
                    }
                }
                _ => break, // already reported as missing edge/vertex
            }
        }
    }

    out
}

impl SatelliteTree {
    /// Errors with the full diagnostic list if the tree is invalid.
    pub fn require_valid(&self) -> Result<(), GraphError> {
        let diags = validate_tree(self);
        if diags.is_empty() {
            Ok(())
        } else {
            let joined = diags
                .iter()
                .map(Diagnostic::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            Err(GraphError::InvalidTree(joined))
        }
    }
}
