//! Slope assignments: filled slopes for the unfilled link components,
//! expressed in each vertex's own Seifert basis.

use std::collections::BTreeMap;

use slope_core::ExtendedSlope;

use crate::{GraphError, SatelliteTree};

/// Map from (vertex id, 1-based component index) to the filled slope in
/// that vertex's Seifert basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlopeAssignment {
    slots: BTreeMap<(String, usize), ExtendedSlope>,
}

impl SlopeAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, vertex: &str, slot: usize, slope: ExtendedSlope) {
        self.slots.insert((vertex.to_string(), slot), slope);
    }

    pub fn get(&self, vertex: &str, slot: usize) -> Option<&ExtendedSlope> {
        self.slots.get(&(vertex.to_string(), slot))
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(String, usize), &ExtendedSlope)> {
        self.slots.iter()
    }

    /// Parses `{"v1": {"1": "3/4", "2": "inf"}}`.
    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let raw: BTreeMap<String, BTreeMap<String, String>> =
            serde_json::from_str(text).map_err(|e| GraphError::ParseInput(e.to_string()))?;
        let mut out = Self::new();
        for (vertex, slots) in raw {
            for (slot, slope) in slots {
                let slot: usize = slot.parse().map_err(|_| {
                    GraphError::ParseInput(format!(
                        "vertex {vertex:?}: slot key {slot:?} is not a positive integer"
                    ))
                })?;
                let slope: ExtendedSlope = slope.parse().map_err(|_| {
                    GraphError::ParseInput(format!(
                        "vertex {vertex:?} slot {slot}: unparsable slope"
                    ))
                })?;
                out.set(&vertex, slot, slope);
            }
        }
        Ok(out)
    }

    pub fn to_json_string(&self) -> String {
        let mut raw: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for ((vertex, slot), slope) in &self.slots {
            raw.entry(vertex.clone())
                .or_default()
                .insert(slot.to_string(), slope.to_string());
        }
        serde_json::to_string_pretty(&raw).expect("string maps always serialize")
    }
}

impl SatelliteTree {
    /// Checks that the assignment covers exactly the unfilled components.
    pub fn check_assignment(&self, a: &SlopeAssignment) -> Result<(), GraphError> {
        let mut expected = 0usize;
        for id in self.vertices.keys() {
            for i in self.free_slots(id)? {
                expected += 1;
                if a.get(id, i).is_none() {
                    return Err(GraphError::AssignmentMismatch(format!(
                        "missing slope for vertex {id:?} component {i}"
                    )));
                }
            }
        }
        if a.len() != expected {
            for ((vertex, slot), _) in a.iter() {
                let valid = self
                    .vertices
                    .contains_key(vertex)
                    .then(|| self.free_slots(vertex).ok())
                    .flatten()
                    .is_some_and(|free| free.contains(slot));
                if !valid {
                    return Err(GraphError::AssignmentMismatch(format!(
                        "slope given for vertex {vertex:?} component {slot}, which is not an \
                         unfilled component"
                    )));
                }
            }
        }
        Ok(())
    }
}
