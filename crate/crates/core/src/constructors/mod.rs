//! Standard partial groupoids: nerves of groups and groupoids, transporter
//! groupoids, products, wedges and free partial groups.

mod group;
mod groupoid;
mod product;
mod transporter;
mod wedge;

pub use group::GroupTable;
pub use groupoid::{nerve_of_group, nerve_of_groupoid, GroupoidPresentation, Morphism};
pub use product::product;
pub use transporter::{
    locality_dimension_formula, transporter_groupoid, transporter_presentation, TransporterOutcome,
    TransporterSpec,
};
pub use wedge::{free_partial_group, wedge, wedge_decompose};
