//! Jordan classes of `GL_n` and decomposition classes of `gl_n` as
//! multisets of `(m, μ ⊢ m)` slots: enumeration, dimensions, induction,
//! closures, sheets and local index sets.

mod closure;
mod datum;
mod poset;

pub use closure::{
    closure_contains, has_rigid_orbit_data, is_closure_normal_gl, local_data, regular_closure_contains, BlockClass,
};
pub use datum::{
    dim_class, dim_orbit, enumerate_classes, induce, levi_shapes, pattern_of, ClassDatum, LeviShape, Mode,
    PointPattern, Slot, ENUMERATION_CAP,
};
pub use poset::{sheets, ClassPoset, POSET_CAP};
