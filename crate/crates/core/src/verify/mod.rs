//! Known-answer suites for the projective-space and Hirzebruch families.

mod families;
mod report;
mod sample;

pub use families::{verify_hirzebruch, verify_veronese, Expected, Family, FamilySpec};
pub use report::{Source, VerifyReport, VerifyRow};
pub use sample::RationalSampler;
