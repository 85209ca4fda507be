_base_ = ['../_base_/default_runtime.py']

experiment = dict(
    type='DiracExperiment',
    dim=1,
    s=[0.25, 0.45, 0.55],
    grid=1024,
    trunc=10000,
    accumulation='compensated')
output = dict(out_dir='results/dirac')
