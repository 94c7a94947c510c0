pub mod cache;
pub mod dad;
pub mod dao;
pub mod error;
pub mod fincat;
pub mod nerve;
pub mod ordinal;
pub mod ptree;
pub mod reedyver;
pub mod symact;

pub use error::{Error, Result};

pub use dad::{DadMorphism, DadObject};
pub use dao::{DaoMorphism, DaoObject};
pub use fincat::{ActionMorphism, CatAction, FinCategory};
pub use ordinal::OrdinalMap;
pub use ptree::{OmegaPMap, PlanarTree};
pub use reedyver::{Report, VerifyOptions};
pub use symact::SymMap;
