"""Command lines run against the fixture corpus, with their expected exit codes.

Golden outputs live in tests/golden/<name>.json; regenerate them with
``python tests/regen_golden.py`` after an intentional output change.
"""

CASES = [
    # name, command, files, extra args, expected exit code
    ("validate_example1", "validate", ["phin_example1.json"], [], 0),
    ("validate_bad_commutation", "validate", ["phin_bad_commutation.json"], [], 1),
    ("validate_group", "validate", ["group_gl2_f5.json"], [], 0),
    ("validate_malformed", "validate", ["malformed.json"], [], 2),
    ("wd_example1", "wd", ["phin_example1.json"], [], 0),
    ("wd_f2_tau1", "wd", ["phin_f2.json"], ["--tau", "1"], 0),
    ("wd_tau_out_of_range", "wd", ["phin_example1.json"], ["--tau", "3"], 2),
    ("wd_bad_commutation", "wd", ["phin_bad_commutation.json"], [], 2),
    ("tauindep_f2", "tauindep", ["phin_f2.json"], [], 0),
    ("fss_jordan_block", "fss", ["wd_jordan_block.json"], [], 0),
    ("ss_sp2", "ss", ["wd_sp2.json"], [], 0),
    ("segments_four_dim", "segments", ["wd_four_dim.json"], [], 0),
    ("segments_sqrt2", "segments", ["wd_sqrt2_special.json"], [], 0),
    ("iso_fss_classes", "iso", ["wd_jordan_block.json", "wd_scalar2.json"], [], 0),
    ("iso_strict", "iso", ["wd_jordan_block.json", "wd_scalar2.json"], ["--strict"], 1),
    ("iso_sp2_vs_crystalline", "iso", ["wd_sp2.json", "wd_crystalline.json"], [], 1),
    ("generic_sp2", "generic", ["wd_sp2.json"], [], 0),
    ("generic_crystalline", "generic", ["wd_crystalline.json"], [], 1),
    ("linv_example1", "linv", ["phin_example1.json"], [], 0),
    ("linv_unfiltered", "linv", ["phin_f2.json"], [], 2),
    ("wa_example1", "wa", ["phin_example1.json"], [], 0),
    ("wa_jump03", "wa", ["phin_jump03.json"], [], 1),
    ("htweights_example1", "htweights", ["phin_example1.json"], [], 0),
    ("monodromy_crys_below_sp2", "monodromy", ["wd_crystalline.json", "wd_sp2.json"], [], 0),
    ("monodromy_sp2_above_crys", "monodromy", ["wd_sp2.json", "wd_crystalline.json"], [], 1),
    ("compat_fss_match", "compat", ["phin_example1.json", "auto_steinberg5.json"], ["--level", "fss"], 0),
    ("compat_crystalline_fss", "compat", ["wd_crystalline.json", "auto_steinberg5.json"], ["--level", "fss"], 1),
    ("compat_crystalline_ss", "compat", ["wd_crystalline.json", "auto_steinberg5.json"], ["--level", "ss"], 0),
    ("compat_sp2_vs_ps_monodromy", "compat", ["wd_sp2.json", "auto_ps_5_1.json"], ["--level", "monodromy"], 1),
    ("compat_unsupported_type", "compat", ["wd_sp2.json", "auto_supercuspidal.json"], [], 2),
    ("enormous_gl2_f5", "enormous", ["group_gl2_f5.json"], [], 0),
    ("enormous_unipotent", "enormous", ["group_unipotent_f5.json"], [], 1),
    ("enormous_scalar", "enormous", ["group_scalar_f5.json"], [], 1),
    ("enormous_cap", "enormous", ["group_small_cap.json"], [], 2),
    ("decgen_reject", "decgen", ["decgen_reject.json"], [], 1),
    ("decgen_accept", "decgen", ["decgen_accept.json"], [], 0),
    ("decgen_equal_char", "decgen", ["decgen_equal_char.json"], [], 2),
    ("scalarcert_present", "scalarcert", ["scalar_present.json"], [], 0),
    ("scalarcert_absent", "scalarcert", ["scalar_absent.json"], [], 1),
]
