//! Fixed points, Bruhat order and Schubert cells of a catenoid quiver
//! Grassmannian inside its flag variety.

mod chain;
mod frame;
mod irreducible;
mod permutation;

pub use chain::{
    bruhat_leq, cell_dimension, components, enumerate_fixed_points, maximal_elements, minimal_chain,
    predicted_fixed_points, subrep_by_summands, subrep_type, Guard, SubsetChain,
};
pub use frame::{build_frame, ResolutionFrame};
pub use irreducible::{
    exists_p_i, hom_criterion, hom_criterion_witness, is_irreducible, parabolic_blocks, rank_criterion,
    weyl_word, word_from_frame_data, WeylElement,
};
pub use permutation::Permutation;
