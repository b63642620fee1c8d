use std::path::PathBuf;

fn main() {
    let path: PathBuf = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", "e6_degrees.txt"]
            .iter()
            .collect()
    });
    let entries = weyltab::unipotent_degrees();
    let text = weyltab::render(&entries);
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).expect("create data directory");
    }
    std::fs::write(&path, &text).expect("write dataset");
    eprintln!("wrote {} degrees to {}", entries.len(), path.display());
}
