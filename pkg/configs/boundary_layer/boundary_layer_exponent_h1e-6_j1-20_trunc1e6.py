_base_ = ['../_base_/default_runtime.py']

# u_{1/2}(x) ~ (x + 1) |ln(x + 1)|^k near x = -1
experiment = dict(
    type='BoundaryLayerExperiment',
    mode='exponent',
    exponent=dict(h=1e-6, j=[1, 20], trunc=1000000),
    accumulation='compensated')
output = dict(out_dir='results/boundary_layer')
