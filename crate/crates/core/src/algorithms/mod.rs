//! Orbit reduction, Mayer–Vietoris checks and conjecture scans.

mod mv;
mod orbit;
mod scan;

pub use mv::{mv_check, MvReport};
pub use orbit::{
    irreducible_homology, is_irreducible, reduce_by_orbits, reduce_by_orbits_with, IrreducibleCheck,
    OrbitReduction, ReductionBranch, ReductionMode, ReductionNode, ReductionTree, SplitHomology,
};
pub use scan::{conjecture_scan, Conjecture, ScanCase, ScanReport};
pub(crate) use scan::orbit_invariance;
