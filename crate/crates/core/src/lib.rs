pub mod algebra;
pub mod axis;
pub mod catalog;
pub mod constructions;
pub mod format;
pub mod linalg;
pub mod parallel;
pub mod scalar;
