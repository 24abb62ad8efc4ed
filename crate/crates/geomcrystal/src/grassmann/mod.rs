//! Exact Grassmannian geometry: points in Plücker coordinates and the
//! affine decorated geometric crystal structure on Gr(k,n) x C^*.

mod crystal;
mod point;

pub use crystal::{sample_c, sample_generic_point, sample_point, CrystalPoint, GeomMaps, ShiftDir};
pub use point::{
    interval, residue_in_1n, set_label, GrassmannError, GrassmannPoint, PluckerIndex,
};
