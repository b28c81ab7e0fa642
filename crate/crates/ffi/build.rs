fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets the manifest dir");
    let header = std::path::Path::new(&crate_dir).join("include").join("rookery.h");
    std::fs::create_dir_all(header.parent().unwrap()).expect("include dir is writable");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        Err(e) => {
            // Keep an existing committed header usable when generation is
            // unavailable (e.g. syntax the parser does not know yet).
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
