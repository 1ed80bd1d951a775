//! Getting data in: CSV files, the embedded Dwaine Studios fixture, and
//! seeded synthetic designs.

mod csv;
mod dwaine;
mod synthetic;

pub use self::csv::{load_csv, read_csv, save_csv, write_csv, CsvSpec};
pub use dwaine::{dwaine_fixture, DISPOSABLE_INCOME, RESPONSE as DWAINE_RESPONSE, TARGET_POPULATION};
pub use synthetic::{generate_orthogonal, generate_synthetic, SyntheticSpec};
