//! Bundled scenario files, one per reproduced experiment.

pub const NAMES: [&str; 4] = ["lab_faraday", "rural_track", "fwa_building", "train_corridor"];

pub fn get(name: &str) -> Option<&'static str> {
    Some(match name {
        "lab_faraday" => include_str!("../../presets/lab_faraday.toml"),
        "rural_track" => include_str!("../../presets/rural_track.toml"),
        "fwa_building" => include_str!("../../presets/fwa_building.toml"),
        "train_corridor" => include_str!("../../presets/train_corridor.toml"),
        _ => return None,
    })
}
