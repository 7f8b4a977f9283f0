y = {0: 4, 1: 3, 2: 2}
k = eval(input())
y[k] = y[k] + 1
print(y[0] + y[1] + y[2])
print(y)
print(y[k] if y[k] != 1 else -1)
