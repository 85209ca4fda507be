_base_ = ['../_base_/default_runtime.py']

experiment = dict(
    type='BoundaryLayerExperiment',
    mode='table1',
    table=dict(
        s=[0.25, 0.5, 0.75],
        h=2**-10,
        j=[1, 20],
        trunc=10000,
        log_exponent=[0.85, 0.82]),
    accumulation='compensated')
output = dict(out_dir='results/boundary_layer')
