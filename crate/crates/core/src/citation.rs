//! Facts that certification steps and surface checks rely on, named by
//! content. A citation is either recomputed by this crate or taken from the
//! literature as a trusted step.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// Checked directly by this crate, no external fact involved.
    Computation,
    /// Generators act as Dehn twists about core curves; cores are disjoint
    /// iff the label is 2 and meet once iff it is 3.
    CoreCurves,
    /// Multitwists about multicurves with no common component commute iff
    /// the multicurves are disjoint.
    MultitwistCommutation,
    /// A core curve outside `T` meets the boundary of the subsurface of an
    /// irreducible spherical `T` iff it meets some core curve of `T`.
    BoundaryIntersection,
    /// Boundaries of disjoint irreducible spherical subsurfaces are disjoint
    /// and non-isotopic.
    DisjointBoundaries,
    /// The square of the central generator of an irreducible spherical
    /// subgroup acts as a multitwist about the subsurface boundary.
    CenterMultitwist,
    /// Free-of-infinity groups map to small-type groups, sending generators
    /// to multitwists with the same disjointness pattern.
    SmallTypeFolding,
    /// Irreducible spherical Artin groups have infinite cyclic center.
    SphericalCenter,
    /// Under the K(pi,1) conjecture the cohomological dimension equals the
    /// largest size of a spherical subset, for every special subgroup.
    DimensionFromSpherical,
    /// Dimension adds over a product with a spherical factor.
    DimensionAdditivity,
    /// A label `inf` between `v` and `w` splits the group as an amalgam of
    /// the two special subgroups missing `v` and `w`.
    AmalgamSplitting,
    /// The center of such an amalgam lies in the center of the factor
    /// missing `v`; in particular it is trivial when that center is.
    AmalgamCenter,
    /// Replacing labels `inf` by 7 defines a quotient of Artin groups.
    LabelSevenQuotient,
    /// Among finite-type families only the dihedral one carries a label 7.
    LabelSevenDihedral,
    /// A free group of rank at least two has trivial center.
    FreeGroupCenter,
    /// Adjoining a central element of infinite order to a subgroup of
    /// maximal dimension raises the dimension.
    CentralElementDimension,
}

impl Citation {
    /// True when the fact is trusted rather than recomputed.
    pub fn is_cited(self) -> bool {
        !matches!(self, Citation::Computation | Citation::LabelSevenDihedral)
    }

    pub fn summary(self) -> &'static str {
        match self {
            Citation::Computation => "direct computation",
            Citation::CoreCurves => "generators act by twists about core curves; m=2 disjoint, m=3 meet once",
            Citation::MultitwistCommutation => "multitwists commute iff their multicurves are disjoint",
            Citation::BoundaryIntersection => {
                "core curve meets subsurface boundary iff it meets a core curve inside"
            }
            Citation::DisjointBoundaries => {
                "boundaries of disjoint irreducible spherical subsurfaces are disjoint and non-isotopic"
            }
            Citation::CenterMultitwist => {
                "squared central generator acts as a multitwist about the subsurface boundary"
            }
            Citation::SmallTypeFolding => {
                "free-of-infinity groups fold onto small type with multitwist images"
            }
            Citation::SphericalCenter => "irreducible spherical Artin groups have infinite cyclic center",
            Citation::DimensionFromSpherical => "under K(pi,1), cd equals the largest spherical subset size",
            Citation::DimensionAdditivity => "cd is additive over the spherical factor splitting",
            Citation::AmalgamSplitting => "an inf label splits the group as an amalgamated product",
            Citation::AmalgamCenter => "the center of the amalgam lies in the center of the factor missing v",
            Citation::LabelSevenQuotient => "replacing inf by 7 gives a quotient",
            Citation::LabelSevenDihedral => "only the dihedral family admits label 7",
            Citation::FreeGroupCenter => "non-abelian free groups have trivial center",
            Citation::CentralElementDimension => {
                "a central element outside a top-dimensional subgroup raises cd"
            }
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(json.as_str().unwrap_or_default())
    }
}
