use crate::error::{Error, Result};

/// Caps for the exhaustive routines. Every exponential search checks its
/// input against one of these before starting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for simple/chordless cycle enumeration.
    pub max_cycle_vertices: usize,
    /// Vertex cap for elementary-subgraph expansion.
    pub max_elementary_vertices: usize,
    /// Edge cap for the `3^m` orientation census.
    pub max_census_edges: usize,
    /// Vertex cap for automorphism search.
    pub max_aut_vertices: usize,
    /// Face cap for the `4^k` sweep in plane class counting.
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_cycle_vertices: 12,
            max_elementary_vertices: 14,
            max_census_edges: 16,
            max_aut_vertices: 10,
            max_faces: 12,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::TooLarge { what, size, cap });
    }
    Ok(())
}
