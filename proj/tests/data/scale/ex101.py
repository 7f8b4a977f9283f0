b = eval(input())
k = [b, b + 1, b + 2]
k[0] = k[1] + k[2]
print(k)
print(k[0] + k[1] + k[2])
print(-k[0])
print(k[1] == b + 1)
