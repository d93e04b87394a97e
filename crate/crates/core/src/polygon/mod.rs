//! The 20-gon for `M₄(5)`: Farey circuit, boundary, side labels and pairing.

pub mod boundary;
pub mod circuit;
pub mod domain;
pub mod labels;
pub mod pairing;

pub use boundary::{boundary_from_circuit, BoundarySequence, Span};
pub use circuit::{search_circuits, validate_circuit, Circuit, MAX_SEARCH_LENGTH};
pub use domain::{coset_domain_check, coset_domain_report, DomainReport};
pub use labels::{side_label_analysis, translation_orbit, Alignment, SideLabelReport, SideLabelTable};
pub use pairing::{pairing_rule_check, rule_matchings, rule_partner, vertex_classes, CornerPartition, PairingTable};
