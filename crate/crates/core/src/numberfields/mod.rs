//! Totally real number fields: descriptors, table ingestion and prime splitting.

pub mod arith;
mod field;
pub mod poly;

pub use field::{
    bundled_field, bundled_fields, bundled_quadratic, ingest_field_table, serialize_field_table,
    FieldDescriptor, SplittingOverride, SplittingSource, SplittingType,
};
