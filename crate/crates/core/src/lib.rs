//! Special orientable sequences over `Z_q`: constructions, window-length lifting and
//! independent property checks.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod euler;
pub mod format;
pub mod lempel;
pub mod registry;
pub mod residue;
pub mod sequence;
pub mod verify;

pub use bounds::{os2_max_period, sos_bound, sos_bound_oracle, sos_bound_oracle_with_limit, BoundBreakdown};
pub use constructions::{
    choose_xyz, construct, embed_qprime, goodify, increment_embed, join_negative, make_s2, make_t,
    make_t2, make_u, make_u_star, make_u_star_from, make_u_starstar, make_u_starstar_from,
    Anchors, ConstructionParams, Embedding, Variant,
};
pub use error::{Error, Result};
pub use euler::{build_graph, eulerian_with_prefix, os2_maximal, os2_starter, EulerGraph};
pub use format::{FileFormat, SequenceFile};
pub use lempel::{d_beta, d_inverse, d_inverse_beta, extend_ea, lift_certified, sos3, sos_general, tower};
pub use registry::{ExampleRecord, EXAMPLES};
pub use residue::{gcd, Residue};
pub use sequence::{fold_residue, RingSequence, Window};
pub use verify::{
    check_disjoint, check_good, check_negative_orientable, check_orientable, check_special,
    check_window, longest_zero_run, report, CheckResult, Disjointness, PropertyReport, Violation,
    ViolationKind,
};
