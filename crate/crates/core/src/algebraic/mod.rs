//! Algebraic decision kernel: discrimination system, resultants, real-root
//! isolation, and the Hurwitz criterion. Pure functions over immutable data.

mod discrim;
mod hurwitz;
mod resultant;
mod roots;
pub(crate) mod subres;

pub use discrim::{
    count_distinct_real_roots, discrimination_sequence, revised_sign_list, DiscriminationSequence,
    RootCount, SignList,
};
pub use hurwitz::{hurwitz_stable, HurwitzReport};
pub use resultant::{bivar_resultant, sylvester_matrix_poly, sylvester_resultant};
pub use roots::{default_root_tolerance, isolate_real_roots, real_roots_f64, IsolatedRoot};

