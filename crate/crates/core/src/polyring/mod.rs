//! Exact bivariate polynomial arithmetic over `Q(sqrt 2, sqrt 3, ...)` and
//! the operators `S_x`, `P_x`, `P_y`, `J` and `D^{1/2}_x`.

mod bipoly;
mod grid;
pub mod json;
mod radical;

pub use bipoly::BiPoly;
pub use grid::{eval_grid, grid_to_csv, GridPoint};
pub use radical::{split_square, RadScalar};
