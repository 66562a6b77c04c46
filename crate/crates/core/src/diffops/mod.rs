//! Differential operators of bounded order preserving a space of
//! polynomials: weight spaces, annihilators and the image in `End(V)`.

mod generators;
mod image;
mod span;
mod weight;

pub use generators::{hirzebruch_generators, sl_generators, Generator};
pub use image::{
    bounding_box_betas, check_irreducible, dense_evaluation_image, evaluation_image,
    evaluation_image_bounded, operator_matrix, preserve_check, EndImage, PreserveResult,
};
pub use weight::{annihilator_weight_dim, difference_weights, preserving_weight_space, WeightSpace};
