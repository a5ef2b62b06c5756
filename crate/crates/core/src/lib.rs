pub mod arith;
pub mod braid;
pub mod geometry;
pub mod homfly;
pub mod params;
pub mod writhe;
