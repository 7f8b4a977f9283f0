d = {1: True, 2: False}
d[3] = d[1] and d[2]
print(d)
