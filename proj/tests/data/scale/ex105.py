k = {0: 3, 1: 0, 2: 8}
y = eval(input())
k[y] = k[y] + 1
print(k[0] + k[1] + k[2])
print(k)
print(k[y] if k[y] != 1 else -1)
