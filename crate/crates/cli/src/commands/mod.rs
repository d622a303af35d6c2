pub mod measure;
pub mod reduce;
pub mod sample;
pub mod verify;
