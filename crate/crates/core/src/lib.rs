pub mod algebra;
pub mod characters;
pub mod cli;
pub mod diagrams;
pub mod jack_oracle;
pub mod nonoriented_maps;
pub mod oriented_maps;
