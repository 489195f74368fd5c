pub mod cli;
pub mod error;
pub mod lie_modules;
pub mod partition;
pub mod plethysm;
pub mod symfunc;
pub mod verify;
