//! Classification of the parameter against the named regions, and
//! certificates for parabolic dust and non-free groups.

pub mod catalog;
pub mod certify;
pub mod numtheory;
pub mod predicates;

pub use catalog::{
    catalog_enumerate, catalog_lookup, catalog_lookup_all, catalog_lookup_with, CatalogEntry, CatalogMatch,
    CatalogRange, Family, LookupOptions, MatchQuality,
};
pub use certify::{
    certify, certify_with, Certificate, CertificateKind, CertifyOptions, Exactness, ExternalTarget, Target,
};
pub use predicates::{
    annulus_of, classify, diamond_member, in_classical_ts, in_ncf, in_nsdc, jorgensen_interior, lox_par_generators,
    special_boundary_point, whitehead_point, ClassicalStatus, Discreteness, NcfPiece, NcfTag, NsdcStatus, Reflection,
    RegionReport, SpecialPoint,
};
