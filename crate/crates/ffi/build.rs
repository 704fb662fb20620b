fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    let mut config = cbindgen::Config::default();
    config.language = cbindgen::Language::C;
    config.include_guard = Some("DOMINION_H".into());
    config.enumeration.prefix_with_name = true;
    cbindgen::Builder::new()
        .with_config(config)
        .with_crate(".")
        .generate()
        .expect("unable to generate C bindings")
        .write_to_file("include/dominion.h");
}
