//! Classes of explicit varieties in the Lazard ring: projective spaces,
//! projective bundles over them (via Quillen's pushforward formula), point
//! blow-ups and Milnor hypersurfaces.

mod classes;
mod quillen;
mod ring;

pub use classes::{
    blowup_point_class, milnor_class, projective_bundle_over_pm, specializations, three_root_series, u5_column_check,
    U5Report,
};
pub use quillen::{quillen_pushforward, quillen_pushforward_with, symbolic_pushforward};
pub use ring::{projective_space_class, ProjectiveSpaceRing, MAX_WEIGHT};

#[cfg(test)]
mod tests;
