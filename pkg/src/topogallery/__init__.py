"""Art-gallery compiler: turn cubical complexes and CNF constraints over the
unit cube into simple polygons whose guard-solution space realizes them, and
verify the construction with exact rational arithmetic."""

from .complexes import (
    ComplexError,
    CubicalComplex,
    circle_complex,
    complex_from_faces,
    complex_to_dnf,
    mobius_complex,
    projective_plane_complex,
    sphere_complex,
    torus_complex,
    validate_complex,
)
from .compiler import (
    CompileError,
    Gallery,
    GuardConfig,
    compile_gallery,
    compile_surface,
    embed,
    surface_formula,
    vertex_count,
)
from .formulas import (
    Band,
    CnfFormula,
    DnfFormula,
    FormulaError,
    VarEq,
    cell_equivalent,
    cnf,
    dnf,
    dnf_to_cnf,
    eval_formula,
    simplify_cnf,
)
from .gadgets import (
    ClauseGadget,
    CopyGadget,
    GadgetError,
    VariableGadget,
    Wedge,
    WedgeFamily,
    build_copy_strip,
    make_clause_gadget,
    make_copy_gadget,
    make_variable_gadget,
    make_wedge_segments,
)
from .geom import (
    GeometryError,
    Point,
    Segment,
    SimplePolygon,
    hausdorff_distance_sq_max,
    intersect_lines,
    invert_through,
    orient,
    pt,
    rat,
    visibility_polygon,
    visible,
)
from .verifier import (
    CoverageReport,
    VerifyError,
    brute_force_min_guards,
    build_cell_complex,
    classify_surface,
    complex_to_cell_complex,
    covers,
    sample_solution_space,
    verify_copy_gadget,
)

__all__ = [
    "Band", "ClauseGadget", "CnfFormula", "CompileError", "ComplexError",
    "CopyGadget", "CoverageReport", "CubicalComplex", "DnfFormula",
    "FormulaError", "GadgetError", "Gallery", "GeometryError", "GuardConfig",
    "Point", "Segment", "SimplePolygon", "VarEq", "VariableGadget",
    "VerifyError", "Wedge", "WedgeFamily",
    "brute_force_min_guards", "build_cell_complex", "build_copy_strip",
    "cell_equivalent", "circle_complex", "classify_surface", "cnf",
    "compile_gallery", "compile_surface", "complex_from_faces",
    "complex_to_cell_complex", "complex_to_dnf", "covers", "dnf",
    "dnf_to_cnf", "embed", "eval_formula", "hausdorff_distance_sq_max",
    "intersect_lines", "invert_through", "make_clause_gadget",
    "make_copy_gadget", "make_variable_gadget", "make_wedge_segments",
    "mobius_complex", "orient", "projective_plane_complex", "pt", "rat",
    "sample_solution_space", "simplify_cnf", "sphere_complex",
    "surface_formula", "torus_complex", "validate_complex", "vertex_count",
    "verify_copy_gadget", "visibility_polygon", "visible",
]
