//! Matrix models of the opposite cells and of the desingularization.

pub mod pattern;
pub mod plucker;
pub mod slices;
pub mod symplectic;

pub use pattern::{opposite_cell_pattern, CellPattern, Group};
pub use plucker::{plucker_restriction, CellPoint, PluckerRange, PluckerValue};
pub use slices::{desing_data, product_identification, t_slice, v_w, v_w_prime, DesingData, LinearSlice};
pub use symplectic::{is_symplectic, opposite_cell_factor, sym_coordinates, BlockMatrix2n};
