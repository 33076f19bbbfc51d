pub mod forms;
pub mod group;
pub mod icosahedral;
pub mod invariance;
pub mod modular;
pub mod singularity;
pub mod theta;
