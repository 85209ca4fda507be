output = dict(out_dir='results', format='csv')
nproc = 1
log_level = 'INFO'
log_file = None
