//! Pure n-dimensional simplicial complexes and their higher-dimensional tree
//! theory: reduced paths, simplicial cycles, several independent tree
//! certificates, and an exhaustive search harness for small complexes.

pub mod certify;
pub mod complex;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod paths;
pub mod simplex;

pub use certify::{certify, CertReport};
pub use complex::{build_complex, FacetList, Graph, Limits, PureComplex};
pub use cycles::CycleWitness;
pub use enumerate::{Conjecture, ConjectureVerdict, EnumSpace};
pub use error::{Error, Result};
pub use paths::{AltSequence, Ordering, PathRelation, ReducedWitness};
pub use simplex::{Simplex, Vertex};
