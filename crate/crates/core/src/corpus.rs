//! The built-in surface corpus: eighteen singular cubics labelled by
//! singularity type (the labels are opaque metadata, never interpreted),
//! two cubics whose pairing with the Fermat quadric stays
//! infinite-dimensional, and three reference hypersurfaces used as `f`.

use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingSpec};

/// A named homogeneous surface `V(g)` in the standard `(x, y, z, w)` ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedSurface {
    pub label: &'static str,
    pub text: &'static str,
    pub degree: u32,
}

impl NamedSurface {
    pub fn polynomial(&self, ring: &Ring) -> Polynomial {
        let p = parse_polynomial(self.text, ring).expect("corpus entries parse");
        debug_assert_eq!(
            p.homogeneity(),
            Some(crate::poly::Homogeneity::Degree(self.degree))
        );
        p
    }
}

/// The ring `Q[x, y, z, w]` under degrevlex, the home of every corpus entry.
pub fn standard_ring() -> Ring {
    RingSpec::degrevlex(vec!["x", "y", "z", "w"]).expect("valid names")
}

/// The eighteen singular cubic surfaces, in table order.
pub const TABLE_CUBICS: [NamedSurface; 18] = [
    NamedSurface { label: "A2", text: "(x+y+z)(x+2y+3z)w+xyz", degree: 3 },
    NamedSurface { label: "2A1", text: "xzw+(z+w)y^2+x^3+x^2y+xy^2+y^3", degree: 3 },
    NamedSurface { label: "A1+A2", text: "x^3+y^3+x^2y+xy^2+y^2z+xzw", degree: 3 },
    NamedSurface { label: "A4", text: "y^2z+yx^2-z^3+xzw", degree: 3 },
    NamedSurface { label: "3A1", text: "y^3+y^2(x+z+w)+4xzw", degree: 3 },
    NamedSurface { label: "A1+A3", text: "wxz+(x+z)(y^2-x^2)", degree: 3 },
    NamedSurface { label: "A5", text: "wxz+y^2z+x^3-z^3", degree: 3 },
    NamedSurface { label: "D4", text: "w(x+y+z)^2+xyz", degree: 3 },
    NamedSurface { label: "2A1+A2", text: "wxz+y^2(x+y+z)", degree: 3 },
    NamedSurface { label: "A1+A4", text: "wxz+y^2z+yx^2", degree: 3 },
    NamedSurface { label: "D5", text: "wx^2+xz^2+y^2z", degree: 3 },
    NamedSurface { label: "4A1", text: "w(xy+xz+yz)+xyz", degree: 3 },
    NamedSurface { label: "A1+2A2", text: "wxz+xy^2+y^3", degree: 3 },
    NamedSurface { label: "2A1+A3", text: "wxz+(x+z)y^2", degree: 3 },
    NamedSurface { label: "A1+A5", text: "wxz+y^2z+x^3", degree: 3 },
    NamedSurface { label: "E6", text: "wx^2+xz^2+y^3", degree: 3 },
    NamedSurface { label: "3A2", text: "wxz+y^3", degree: 3 },
    NamedSurface { label: "~E8", text: "y^3+2z^3+4w^3", degree: 3 },
];

/// Cubics whose pairing with the Fermat quadric has an infinite series.
pub const INFINITE_CUBICS: [NamedSurface; 2] = [
    NamedSurface { label: "A3", text: "xzw+(x+z)(y^2-x^2-z^2)", degree: 3 },
    NamedSurface { label: "2A2", text: "x^3+y^3+x^2y+xy^2+xzw", degree: 3 },
];

/// The reference `f` hypersurfaces: Fermat quadric, Fermat cubic, and the
/// coordinate hyperplane.
pub const REFERENCE_SURFACES: [NamedSurface; 3] = [
    NamedSurface { label: "fermat-d2", text: "x^2+y^2+z^2+w^2", degree: 2 },
    NamedSurface { label: "fermat-d3", text: "x^3+y^3+z^3+w^3", degree: 3 },
    NamedSurface { label: "hyperplane", text: "x", degree: 1 },
];

/// All 23 corpus entries.
pub fn corpus() -> Vec<NamedSurface> {
    TABLE_CUBICS
        .iter()
        .chain(INFINITE_CUBICS.iter())
        .chain(REFERENCE_SURFACES.iter())
        .copied()
        .collect()
}

pub fn by_label(label: &str) -> Option<NamedSurface> {
    corpus().into_iter().find(|s| s.label == label)
}
