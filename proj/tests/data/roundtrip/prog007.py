def show(v):
    return print(v)
r = show([1, {2: False}])
print(r)
